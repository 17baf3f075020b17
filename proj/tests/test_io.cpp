#include <functional>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "triage/config.hpp"
#include "triage/io.hpp"

using namespace triage;
using triage::testing::TempDir;

namespace {

ErrorKind kind_of(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

}  // namespace

TEST(LoadTweets, EmptyFile) {
  TempDir dir;
  EXPECT_TRUE(load_tweets(dir.write("empty.jsonl", "")).empty());
  EXPECT_TRUE(load_tweets(dir.write("blank.jsonl", "\n  \n")).empty());
}

TEST(LoadTweets, KeepsFileOrderAndFields) {
  TempDir dir;
  const auto path = dir.write("c.jsonl",
                              R"({"id":"b","text":"Baha sa Marikina","created_at":"2013-11-08T01:00:00Z"})"
                              "\n"
                              R"({"id":"a","text":"need rice","created_at":"2013-11-08T09:30:00+08:00"})"
                              "\n"
                              R"({"id":"c","text":"ñ ü","created_at":"2013-11-09T00:00:00.75Z","extra":1})"
                              "\n");
  const auto tweets = load_tweets(path);
  ASSERT_EQ(tweets.size(), 3u);
  EXPECT_EQ(tweets[0].id, "b");
  EXPECT_EQ(tweets[1].id, "a");
  EXPECT_EQ(tweets[2].id, "c");
  EXPECT_EQ(tweets[0].text, "Baha sa Marikina");
  EXPECT_EQ(tweets[2].text, "ñ ü");
  EXPECT_EQ(format_iso8601(tweets[0].created_at), "2013-11-08T01:00:00Z");
  EXPECT_EQ(tweets[1].created_at, tweets[0].created_at + 30 * 60);
  EXPECT_EQ(format_iso8601(tweets[2].created_at), "2013-11-09T00:00:00Z");
  for (const auto& t : tweets) {
    EXPECT_TRUE(t.tokens.empty());
    EXPECT_TRUE(t.locations.empty());
    EXPECT_FALSE(t.relevance);
    EXPECT_FALSE(t.topic_cluster);
  }
}

TEST(LoadTweets, ErrorsNameTheLine) {
  TempDir dir;
  std::string msg;
  const auto missing = dir.write("m.jsonl",
                                 R"({"id":"1","text":"x","created_at":"2013-11-08T01:00:00Z"})"
                                 "\n"
                                 R"({"id":"2","text":"y"})"
                                 "\n");
  EXPECT_EQ(kind_of([&] { load_tweets(missing); }, &msg), ErrorKind::Parse);
  EXPECT_NE(msg.find(":2:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("created_at"), std::string::npos) << msg;

  const auto dup = dir.write("d.jsonl",
                             R"({"id":"1","text":"x","created_at":"2013-11-08T01:00:00Z"})"
                             "\n"
                             R"({"id":"1","text":"y","created_at":"2013-11-08T01:00:00Z"})"
                             "\n");
  EXPECT_EQ(kind_of([&] { load_tweets(dup); }, &msg), ErrorKind::Validation);
  EXPECT_NE(msg.find(":2:"), std::string::npos) << msg;

  const auto stamp = dir.write("s.jsonl", R"({"id":"1","text":"x","created_at":"Nov 8 2013"})" "\n");
  EXPECT_EQ(kind_of([&] { load_tweets(stamp); }, &msg), ErrorKind::Parse);
  EXPECT_NE(msg.find(":1:"), std::string::npos) << msg;

  const auto garbage = dir.write("g.jsonl", "{not json\n");
  EXPECT_EQ(kind_of([&] { load_tweets(garbage); }), ErrorKind::Parse);

  EXPECT_EQ(kind_of([&] { load_tweets(dir.file("absent.jsonl")); }), ErrorKind::Io);
}

TEST(LoadTraining, RecordsAndLabels) {
  TempDir dir;
  const auto train = dir.write("t.jsonl", R"({"text":"need rice","label":"Relief"})" "\n");
  const auto records = load_training(train);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].label, "Relief");

  const auto labels = load_labels(dir.write("l.jsonl", R"({"id":"a","label":"x"})" "\n" R"({"id":"b","label":"y"})" "\n"));
  EXPECT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels.at("b"), "y");
  const auto dup = dir.write("ld.jsonl", R"({"id":"a","label":"x"})" "\n" R"({"id":"a","label":"y"})" "\n");
  EXPECT_THROW(load_labels(dup), Error);
}

TEST(Timestamps, ParseAndFormat) {
  EXPECT_EQ(parse_iso8601("1970-01-01T00:00:00Z"), 0);
  EXPECT_EQ(parse_iso8601("1970-01-02T00:00:00+00:00"), kSecondsPerDay);
  EXPECT_EQ(parse_iso8601("2013-11-08T08:00:00+08:00"), parse_iso8601("2013-11-08T00:00:00Z"));
  EXPECT_EQ(parse_iso8601("2013-11-07T19:00:00-0500"), parse_iso8601("2013-11-08T00:00:00Z"));
  EXPECT_EQ(parse_iso8601("2013-11-08 00:00Z"), parse_iso8601("2013-11-08T00:00:00Z"));
  EXPECT_FALSE(parse_iso8601("2013-11-08T00:00:00"));
  EXPECT_FALSE(parse_iso8601("2013-02-30T00:00:00Z"));
  EXPECT_FALSE(parse_iso8601("2013-11-08T24:00:00Z"));
  EXPECT_FALSE(parse_iso8601("2013-11-08T00:00:00Zjunk"));
  for (UtcSeconds t : {UtcSeconds{0}, UtcSeconds{1384000000}, UtcSeconds{-86401}, UtcSeconds{951782400}}) {
    EXPECT_EQ(parse_iso8601(format_iso8601(t)), t);
  }
}

TEST(Config, DefaultsRoundTripAndValidation) {
  const PipelineConfig defaults;
  EXPECT_EQ(defaults.topic_threshold, 0.01);
  EXPECT_EQ(defaults.st_threshold, 0.8);
  EXPECT_EQ(defaults.iat_limit, 7 * kSecondsPerDay);
  EXPECT_EQ(defaults.gamma, 0.01);
  EXPECT_EQ(defaults.label_top_k, 5u);

  const auto back = config_from_json(nlohmann::json::parse(to_json(defaults).dump()));
  EXPECT_EQ(to_json(back), to_json(defaults));

  EXPECT_EQ(config_from_json({{"iat_limit_days", 2}}).iat_limit, 2 * kSecondsPerDay);
  EXPECT_EQ(config_from_json({{"st_threshold", 0.5}}).st_threshold, 0.5);
  EXPECT_EQ(kind_of([] { config_from_json({{"thresh", 1}}); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { config_from_json({{"st_threshold", 1.5}}); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { config_from_json({{"gamma", "big"}}); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { config_from_json(nlohmann::json::array()); }), ErrorKind::Parse);

  TempDir dir;
  const auto cfg = load_config(dir.write("c.json", R"({"topic_threshold": 0.05})"));
  EXPECT_EQ(cfg.topic_threshold, 0.05);
  EXPECT_EQ(kind_of([&] { load_config(dir.write("bad.json", "{")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([&] { load_config(dir.file("none.json")); }), ErrorKind::Io);
}
