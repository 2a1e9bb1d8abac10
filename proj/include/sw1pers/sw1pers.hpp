#pragma once

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "sw1pers/baseline.hpp"
#include "sw1pers/datasets.hpp"
#include "sw1pers/denoise.hpp"
#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"
#include "sw1pers/field.hpp"
#include "sw1pers/lower_bound.hpp"
#include "sw1pers/parallel.hpp"
#include "sw1pers/persistence.hpp"
#include "sw1pers/rips.hpp"
#include "sw1pers/roc.hpp"
#include "sw1pers/scoring.hpp"
#include "sw1pers/signal.hpp"
#include "sw1pers/synth.hpp"
