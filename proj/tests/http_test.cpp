#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "httplib.h"
#include "titlegen/service.hpp"

namespace {

using ::testing::HasSubstr;
using json = nlohmann::json;
using namespace titlegen;
using namespace titlegen::service;

// A live server on an ephemeral loopback port.
class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    register_routes(server_, svc_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  json body_of(const httplib::Result& r) { return json::parse(r->body); }

  std::string create() {
    const json req = {{"abstract", abstract_}};
    auto r = client_->Post("/api/sessions", req.dump(), "application/json");
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, 201);
    return body_of(r)["session_id"].get<std::string>();
  }

  const titlegen::testing::DeskModels& m_ = titlegen::testing::desk_models();
  TitleService svc_{m_.view(), ServiceConfig{}};
  std::string abstract_ = titlegen::testing::desk_corpus().front().abstract_text();
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpTest, FullFlow) {
  const json req = {{"abstract", abstract_}};
  auto r = client_->Post("/api/sessions", req.dump(), "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 201);
  const json created = body_of(r);
  const std::string id = created["session_id"];
  EXPECT_EQ(created["state"], "parts_ready");
  EXPECT_FALSE(created["parts"].empty());
  EXPECT_TRUE(created["parts"][0].contains("span"));

  const json edit = {{"parts", {"mobile robot", "in", "mapping and localization", "non - static",
                                "environments"}}};
  r = client_->Put("/api/sessions/" + id + "/parts", edit.dump(), "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(body_of(r)["parts"].size(), 5u);
  EXPECT_TRUE(body_of(r)["parts"][1]["span"].is_null());

  r = client_->Post("/api/sessions/" + id + "/candidates", "", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  const json cands = body_of(r);
  EXPECT_EQ(cands["state"], "generated");
  EXPECT_EQ(cands["used_fallback"], false);
  bool found = false;
  for (const auto& c : cands["candidates"]) {
    EXPECT_TRUE(c.contains("score"));
    EXPECT_TRUE(c.contains("grammar_ok"));
    found = found || c["text"] == titlegen::testing::kMappingTitle;
  }
  EXPECT_TRUE(found);

  r = client_->Get("/api/sessions/" + id);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  const json got = body_of(r);
  EXPECT_EQ(got["state"], "generated");
  EXPECT_EQ(got["candidates"], cands["candidates"]);
}

TEST_F(HttpTest, RepeatedGenerateIsByteIdentical) {
  const std::string id = create();
  auto a = client_->Post("/api/sessions/" + id + "/candidates", "", "application/json");
  auto b = client_->Post("/api/sessions/" + id + "/candidates", "", "application/json");
  ASSERT_TRUE(a);
  ASSERT_TRUE(b);
  EXPECT_EQ(a->body, b->body);
}

TEST_F(HttpTest, ErrorBodies) {
  auto r = client_->Get("/api/sessions/0123abcd");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 404);
  EXPECT_EQ(body_of(r)["error"], "not found");
  EXPECT_TRUE(body_of(r)["detail"].is_string());

  r = client_->Post("/api/sessions", "{\"abstract\": \"\"}", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);

  r = client_->Post("/api/sessions", "not json", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  EXPECT_THAT(body_of(r)["detail"].get<std::string>(), HasSubstr("JSON"));

  r = client_->Post("/api/sessions", "{\"text\": 1}", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);

  const std::string id = create();
  json nine = {{"parts", std::vector<std::string>(9, "x")}};
  r = client_->Put("/api/sessions/" + id + "/parts", nine.dump(), "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  EXPECT_THAT(body_of(r)["detail"].get<std::string>(), HasSubstr("too many parts"));

  r = client_->Put("/api/sessions/" + id + "/parts", "{\"parts\": [1]}", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
}

TEST_F(HttpTest, CorsPreflight) {
  auto r = client_->Options("/api/sessions");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 204);
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "*");
}

}  // namespace
