#include "titlegen/service.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <thread>

#include "fixtures.hpp"

namespace {

using ::testing::HasSubstr;
using namespace titlegen;
using namespace titlegen::service;

const std::vector<std::string> kMappingEdit = {"mobile robot", "in", "mapping and localization",
                                                "non - static", "environments"};

class ServiceTest : public ::testing::Test {
 protected:
  const titlegen::testing::DeskModels& m = titlegen::testing::desk_models();
  TitleService svc{m.view(), ServiceConfig{}};
  std::string abstract = titlegen::testing::desk_corpus().front().abstract_text();
};

TEST(SessionIdTest, HexAndDistinct) {
  std::set<std::string> ids;
  for (int i = 0; i < 200; ++i) {
    const auto id = new_session_id();
    ASSERT_EQ(id.size(), 32u);
    EXPECT_TRUE(std::all_of(id.begin(), id.end(),
                            [](char c) { return std::isxdigit(c) && !std::isupper(c); }));
    ids.insert(id);
  }
  EXPECT_EQ(ids.size(), 200u);
}

TEST_F(ServiceTest, CreateExtractsParts) {
  const Session s = svc.create_session(abstract);
  EXPECT_EQ(s.state, SessionState::kPartsReady);
  EXPECT_GE(s.current_parts.size(), 1u);
  EXPECT_LE(s.current_parts.size(), 8u);
  EXPECT_EQ(s.generated_parts.size(), s.current_parts.size());
  for (const auto& p : s.current_parts) EXPECT_TRUE(p.source_span.has_value());
  EXPECT_EQ(svc.get_session(s.id).abstract, abstract);
}

TEST_F(ServiceTest, SameAbstractGivesDistinctSessions) {
  const auto a = svc.create_session(abstract);
  const auto b = svc.create_session(abstract);
  EXPECT_NE(a.id, b.id);
  EXPECT_EQ(svc.store().size(), 2u);
}

TEST_F(ServiceTest, CreateValidatesAbstract) {
  EXPECT_THROW(svc.create_session(""), ValidationError);
  EXPECT_THROW(svc.create_session("   \n"), ValidationError);
  EXPECT_THROW(svc.create_session(std::string(10001, 'a')), ValidationError);
}

TEST_F(ServiceTest, NoPartsCarriesScores) {
  titlegen::testing::FixedTokenScorer silent(-1000.0);
  auto view = m.view();
  view.tagger = &silent;
  TitleService quiet(view, ServiceConfig{});
  try {
    quiet.create_session("robots map rooms");
    FAIL();
  } catch (const NoPartsError& e) {
    EXPECT_FALSE(e.scores().empty());
    const auto r = error_response(e);
    EXPECT_EQ(r.status, 422);
    EXPECT_EQ(r.body["error"], "no title parts");
    EXPECT_THAT(r.body["detail"].get<std::string>(), HasSubstr("-1000"));
  }
}

TEST_F(ServiceTest, EditedPartsStoredVerbatim) {
  const auto s = svc.create_session(abstract);
  const auto u = svc.update_parts(s.id, kMappingEdit);
  ASSERT_EQ(u.current_parts.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(u.current_parts[i].text, kMappingEdit[i]);
    EXPECT_FALSE(u.current_parts[i].source_span.has_value());
  }
  EXPECT_EQ(u.state, SessionState::kPartsReady);
}

TEST_F(ServiceTest, EditedPartsGenerateRealTitle) {
  const auto s = svc.create_session(abstract);
  svc.update_parts(s.id, kMappingEdit);
  const auto g = svc.generate_candidates(s.id);
  EXPECT_EQ(g.state, SessionState::kGenerated);
  EXPECT_FALSE(g.used_fallback);
  const bool found = std::any_of(g.candidates.begin(), g.candidates.end(), [](const auto& c) {
    return c.text == titlegen::testing::kMappingTitle;
  });
  EXPECT_TRUE(found);
}

TEST_F(ServiceTest, UpdateValidates) {
  const auto s = svc.create_session(abstract);
  EXPECT_THROW(svc.update_parts(s.id, {}), ValidationError);
  EXPECT_THROW(svc.update_parts(s.id, {"ok", "  "}), ValidationError);
  try {
    svc.update_parts(s.id, std::vector<std::string>(9, "x"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.what(), HasSubstr("too many parts"));
  }
  EXPECT_THROW(svc.update_parts("deadbeef", {"x"}), NotFoundError);
  EXPECT_THROW(svc.get_session("deadbeef"), NotFoundError);
  EXPECT_THROW(svc.generate_candidates("deadbeef"), NotFoundError);
}

TEST_F(ServiceTest, EditAfterGenerateResetsState) {
  const auto s = svc.create_session(abstract);
  svc.generate_candidates(s.id);
  const auto u = svc.update_parts(s.id, {"robot", "mapping"});
  EXPECT_EQ(u.state, SessionState::kPartsReady);
  EXPECT_TRUE(u.candidates.empty());
  const auto g = svc.generate_candidates(s.id);
  EXPECT_EQ(g.state, SessionState::kGenerated);
  EXPECT_FALSE(g.candidates.empty());
}

TEST_F(ServiceTest, RegenerateIsIdempotent) {
  const auto s = svc.create_session(abstract);
  const auto a = candidates_response(svc.generate_candidates(s.id)).dump();
  const auto b = candidates_response(svc.generate_candidates(s.id)).dump();
  EXPECT_EQ(a, b);
}

TEST_F(ServiceTest, SessionsAreIsolated) {
  const auto a = svc.create_session(abstract);
  const auto b = svc.create_session(abstract);
  const auto before = session_to_json(svc.get_session(b.id)).dump();
  svc.update_parts(a.id, kMappingEdit);
  svc.generate_candidates(a.id);
  EXPECT_EQ(session_to_json(svc.get_session(b.id)).dump(), before);
}

TEST_F(ServiceTest, ConcurrentSessions) {
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(svc.create_session(abstract).id);
  std::vector<std::thread> workers;
  for (const auto& id : ids) {
    workers.emplace_back([&, id] {
      svc.update_parts(id, {"robot", "mapping", "dynamic"});
      svc.generate_candidates(id);
    });
  }
  for (auto& w : workers) w.join();
  const auto first = candidates_response(svc.get_session(ids[0]));
  for (const auto& id : ids) {
    auto r = candidates_response(svc.get_session(id));
    r["session_id"] = first["session_id"];
    EXPECT_EQ(r.dump(), first.dump());
  }
}

TEST_F(ServiceTest, SnapshotRoundTrip) {
  const auto s = svc.create_session(abstract);
  svc.update_parts(s.id, kMappingEdit);
  svc.generate_candidates(s.id);
  titlegen::testing::TempDir dir;
  svc.save_snapshot(dir / "snap.json");

  TitleService other(m.view(), ServiceConfig{});
  other.load_snapshot(dir / "snap.json");
  const auto a = session_to_json(svc.get_session(s.id));
  const auto b = session_to_json(other.get_session(s.id));
  EXPECT_EQ(a, b);
  EXPECT_THROW(other.load_snapshot(dir / "missing.json"), IoError);
  titlegen::testing::write_file(dir / "bad.json", "{not json");
  EXPECT_THROW(other.load_snapshot(dir / "bad.json"), ValidationError);
}

TEST(SessionStoreTest, PurgeExpired) {
  SessionStore store;
  const auto now = std::chrono::system_clock::now();
  Session fresh;
  fresh.id = "aa";
  fresh.created_at = now - std::chrono::hours(1);
  Session stale;
  stale.id = "bb";
  stale.created_at = now - std::chrono::hours(25);
  store.insert(fresh);
  store.insert(stale);
  EXPECT_EQ(store.purge_expired(now, std::chrono::hours(24)), 1u);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_NO_THROW(store.find("aa"));
  EXPECT_THROW(store.find("bb"), NotFoundError);
}

TEST(SessionJsonTest, CandidateBodyShape) {
  const TitleCandidate c{"a b", 0.75, {1, 0}, true};
  const auto j = candidate_to_json(c);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(j["text"], "a b");
  EXPECT_EQ(j["score"], 0.75);
  EXPECT_EQ(j["grammar_ok"], true);
  const auto p = part_to_json({"robot", PieceSpan{2, 4}});
  EXPECT_EQ(p["span"], nlohmann::json::array({2, 4}));
  EXPECT_TRUE(part_to_json({"x", std::nullopt})["span"].is_null());
}

TEST(ErrorResponseTest, StatusClasses) {
  EXPECT_EQ(error_response(ValidationError("v")).status, 400);
  EXPECT_EQ(error_response(ParseError("p", 0)).status, 400);
  EXPECT_EQ(error_response(NotFoundError("n")).status, 404);
  EXPECT_EQ(error_response(TimeoutError("t")).status, 504);
  EXPECT_EQ(error_response(ExternalError("e")).status, 502);
  EXPECT_EQ(error_response(std::runtime_error("r")).status, 500);
  const auto r = error_response(NotFoundError("unknown session x"));
  EXPECT_EQ(r.body["error"], "not found");
  EXPECT_EQ(r.body["detail"], "unknown session x");
}

}  // namespace
