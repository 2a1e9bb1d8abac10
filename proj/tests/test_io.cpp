#include <gtest/gtest.h>

#include <sstream>

#include "sw1pers/io.hpp"

using namespace sw1pers;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  std::istringstream in(text);
  try {
    read_signal_csv(in, "sig.csv");
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(SignalCsv, HeaderOptional) {
  std::istringstream a("time,value\n0,1\n0.5,2\n1,3\n"), b("0,1\n0.5,2\n\n# comment\n1,3\r\n");
  const auto x = read_signal_csv(a), y = read_signal_csv(b);
  ASSERT_EQ(x.size(), 3u);
  ASSERT_EQ(y.size(), 3u);
  EXPECT_EQ(x.values()[2], 3.0);
  EXPECT_EQ(y.times()[1], 0.5);
}

TEST(SignalCsv, ErrorsCarryLineNumbers) {
  std::string msg;
  EXPECT_EQ(parse_kind("time,value\n0,1\n1,abc\n", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("sig.csv:3"), std::string::npos) << msg;
  EXPECT_EQ(parse_kind("0,1\n1,2,3\n", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("sig.csv:2"), std::string::npos);
  EXPECT_EQ(parse_kind("0,1\n0,2\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("time,value\n"), ErrorKind::EmptySampleSet);
  EXPECT_THROW(read_signal_csv(std::string("/nonexistent/x.csv")), Error);
}

TEST(SignalCsv, RoundTrip) {
  const auto s = synth(Shape::Chirp, 0.2, 0.1, 20, 3);
  std::stringstream io;
  write_signal_csv(io, s);
  const auto t = read_signal_csv(io);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.times()[i], t.times()[i]);
    EXPECT_EQ(s.values()[i], t.values()[i]);
  }
}

TEST(DatasetCsv, RoundTrip) {
  const auto d = make_roc_dataset(0.25, 2, 3);
  std::stringstream io;
  write_dataset_csv(io, d);
  const auto e = read_dataset_csv(io);
  ASSERT_EQ(e.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    EXPECT_EQ(e[k].id, d[k].id);
    EXPECT_EQ(e[k].shape, d[k].shape);
    EXPECT_EQ(e[k].periodic, d[k].periodic);
    for (std::size_t i = 0; i < d[k].signal.size(); ++i) EXPECT_EQ(e[k].signal.values()[i], d[k].signal.values()[i]);
  }
}

TEST(DatasetCsv, MissingLabels) {
  std::istringstream in("id,time,value\na,0,1\na,1,2\n");
  try {
    read_dataset_csv(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingLabels);
  }
}

TEST(DiagramJson, RoundTrip) {
  PersistenceDiagram d;
  d.dim = 0;
  d.field = 11;
  d.pairs = {{0.0, 0.1234567890123456789}, {0.0, kInfinity}};
  d.censored = {{0.5, 2.0}};
  const auto j = to_json(d);
  EXPECT_TRUE(j["pairs"][1][1].is_null());
  const auto back = diagram_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.dim, 0);
  EXPECT_EQ(back.field, 11u);
  EXPECT_EQ(back.pairs, d.pairs);
  EXPECT_EQ(back.censored, d.censored);
  EXPECT_THROW(diagram_from_json(nlohmann::json::parse(R"({"dim":1})")), Error);
}

TEST(ScoreJson, RoundTrip) {
  const auto s = score(synth(Shape::Cosine, 0.1, 0.2, 50, 1), ScoreConfig{});
  const auto back = score_from_json(nlohmann::json::parse(to_json(s).dump()));
  EXPECT_EQ(back.value, s.value);
  EXPECT_EQ(back.best_L, s.best_L);
  ASSERT_EQ(back.periods.size(), s.periods.size());
  for (std::size_t i = 0; i < s.periods.size(); ++i) {
    EXPECT_EQ(back.periods[i].h1.pairs, s.periods[i].h1.pairs);
    EXPECT_EQ(back.periods[i].birth, s.periods[i].birth);
  }
}
