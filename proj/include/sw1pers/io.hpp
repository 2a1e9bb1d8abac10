#pragma once

// CSV input for signals and datasets, JSON for diagrams and scores.
// JSON support needs nlohmann/json (vendored as json.hpp) on the include path.

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sw1pers/datasets.hpp"
#include "sw1pers/error.hpp"
#include "sw1pers/persistence.hpp"
#include "sw1pers/scoring.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  for (std::size_t start = 0;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

[[noreturn]] inline void parse_error(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return in;
}

}  // namespace detail

/// `time,value` rows. A first line whose fields are not both numbers is
/// taken as a header; blank lines and lines starting with '#' are skipped.
inline SampledSignal read_signal_csv(std::istream& in, const std::string& source = "<input>") {
  std::vector<double> times, values;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = detail::split_csv(text);
    double t = 0, v = 0;
    const bool numeric = fields.size() == 2 && detail::parse_double(fields[0], t) && detail::parse_double(fields[1], v);
    if (!numeric) {
      if (first && fields.size() == 2) {
        first = false;
        continue;
      }
      detail::parse_error(source, lineno, fields.size() != 2 ? "expected 2 columns (time,value)" : "not a finite number");
    }
    first = false;
    if (!times.empty() && t <= times.back()) detail::parse_error(source, lineno, "times must be strictly increasing");
    times.push_back(t);
    values.push_back(v);
  }
  if (times.empty()) throw Error(ErrorKind::EmptySampleSet, source + ": no samples");
  return SampledSignal(std::move(times), std::move(values));
}

inline SampledSignal read_signal_csv(const std::string& path) {
  auto in = detail::open_input(path);
  return read_signal_csv(in, path);
}

inline void write_signal_csv(std::ostream& out, const SampledSignal& s) {
  out << "time,value\n";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.times()[i], s.values()[i]);
    out << buf;
  }
}

/// Long-format dataset: `id,shape,label,time,value`, label 1 = periodic.
inline void write_dataset_csv(std::ostream& out, const std::vector<LabeledSignal>& data) {
  out << "id,shape,label,time,value\n";
  char buf[64];
  for (const auto& d : data)
    for (std::size_t i = 0; i < d.signal.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", d.signal.times()[i], d.signal.values()[i]);
      out << d.id << ',' << d.shape << ',' << (d.periodic ? 1 : 0) << ',' << buf;
    }
}

/// Signals appear in order of first occurrence of their id.
inline std::vector<LabeledSignal> read_dataset_csv(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw Error(ErrorKind::EmptySampleSet, source + ": empty dataset");
  ++lineno;
  const auto header = detail::split_csv(detail::trim(line));
  std::map<std::string, int> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[std::string(header[i])] = static_cast<int>(i);
  for (const char* need : {"id", "time", "value"})
    if (!col.count(need)) detail::parse_error(source, lineno, std::string("missing column '") + need + "'");
  const bool has_label = col.count("label") > 0, has_shape = col.count("shape") > 0;

  struct Acc {
    std::string shape;
    int label;
    std::vector<double> t, v;
  };
  std::vector<std::string> order;
  std::map<std::string, Acc> acc;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto f = detail::split_csv(text);
    if (f.size() != header.size()) detail::parse_error(source, lineno, "expected " + std::to_string(header.size()) + " columns");
    const std::string id(f[col["id"]]);
    double t = 0, v = 0;
    if (!detail::parse_double(f[col["time"]], t) || !detail::parse_double(f[col["value"]], v))
      detail::parse_error(source, lineno, "not a finite number");
    int label = -1;
    if (has_label) {
      const auto l = f[col["label"]];
      if (l == "1" || l == "periodic") label = 1;
      else if (l == "0" || l == "nonperiodic") label = 0;
      else if (!l.empty()) detail::parse_error(source, lineno, "label must be 0 or 1");
    }
    auto [it, fresh] = acc.try_emplace(id);
    if (fresh) {
      order.push_back(id);
      it->second.shape = has_shape ? std::string(f[col["shape"]]) : "";
      it->second.label = label;
    } else if (it->second.label != label) {
      detail::parse_error(source, lineno, "inconsistent label for " + id);
    }
    if (!it->second.t.empty() && t <= it->second.t.back())
      detail::parse_error(source, lineno, "times must be strictly increasing within " + id);
    it->second.t.push_back(t);
    it->second.v.push_back(v);
  }
  std::vector<LabeledSignal> out;
  for (const auto& id : order) {
    auto& a = acc[id];
    if (a.label < 0) throw Error(ErrorKind::MissingLabels, source + ": signal " + id + " has no label");
    out.push_back({id, a.shape, a.label == 1, SampledSignal(std::move(a.t), std::move(a.v))});
  }
  return out;
}

inline std::vector<LabeledSignal> read_dataset_csv(const std::string& path) {
  auto in = detail::open_input(path);
  return read_dataset_csv(in, path);
}

// JSON. Deaths at infinity are written as null.

inline nlohmann::json pair_json(double b, double d) {
  return nlohmann::json::array({b, std::isinf(d) ? nlohmann::json(nullptr) : nlohmann::json(d)});
}

inline nlohmann::json to_json(const PersistenceDiagram& dgm) {
  nlohmann::json pairs = nlohmann::json::array(), censored = nlohmann::json::array();
  for (const auto& p : dgm.pairs) pairs.push_back(pair_json(p.birth, p.death));
  for (const auto& p : dgm.censored) censored.push_back(pair_json(p.birth, p.death));
  return {{"dim", dgm.dim}, {"field", dgm.field}, {"pairs", pairs}, {"censored", censored}};
}

inline PersistenceDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    PersistenceDiagram dgm;
    dgm.dim = j.at("dim").get<int>();
    dgm.field = j.at("field").get<std::uint32_t>();
    auto read = [](const nlohmann::json& arr, std::vector<PersistencePair>& out) {
      for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::ParseError, "pair must be [birth, death]");
        out.push_back({p[0].get<double>(), p[1].is_null() ? kInfinity : p[1].get<double>()});
      }
    };
    read(j.at("pairs"), dgm.pairs);
    if (j.contains("censored")) read(j.at("censored"), dgm.censored);
    return dgm;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad diagram JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const PeriodScore& p, bool with_diagram = true) {
  nlohmann::json j = {{"L", p.L},
                      {"score", p.score},
                      {"max_persistence", p.max_persistence},
                      {"birth", p.birth},
                      {"death", p.death},
                      {"degenerate", p.degenerate}};
  if (!p.note.empty()) j["note"] = p.note;
  if (with_diagram) j["diagram"] = to_json(p.h1);
  return j;
}

inline nlohmann::json to_json(const Score& s, bool with_diagrams = true) {
  nlohmann::json periods = nlohmann::json::array();
  for (const auto& p : s.periods) periods.push_back(to_json(p, with_diagrams));
  return {{"score", s.value}, {"best_L", s.best_L}, {"periods", periods}};
}

inline Score score_from_json(const nlohmann::json& j) {
  try {
    Score s;
    s.value = j.at("score").get<double>();
    s.best_L = j.at("best_L").get<int>();
    for (const auto& pj : j.at("periods")) {
      PeriodScore p;
      p.L = pj.at("L").get<int>();
      p.score = pj.at("score").get<double>();
      p.max_persistence = pj.at("max_persistence").get<double>();
      p.birth = pj.at("birth").get<double>();
      p.death = pj.at("death").get<double>();
      p.degenerate = pj.at("degenerate").get<bool>();
      if (pj.contains("note")) p.note = pj.at("note").get<std::string>();
      if (pj.contains("diagram")) p.h1 = diagram_from_json(pj.at("diagram"));
      s.periods.push_back(std::move(p));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad score JSON: ") + e.what());
  }
}

}  // namespace sw1pers
