#include "titlegen/service.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "httplib.h"
#include "titlegen/text.hpp"

namespace titlegen::service {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::system_clock;

std::int64_t to_unix(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::seconds>(t.time_since_epoch()).count();
}

SessionState state_from_string(const std::string& s) {
  if (s == "parts_ready") return SessionState::kPartsReady;
  if (s == "generated") return SessionState::kGenerated;
  throw ValidationError("unknown session state '" + s + "'");
}

TitlePart part_from_json(const json& j) {
  TitlePart p;
  p.text = j.at("text").get<std::string>();
  if (j.contains("span") && j["span"].is_array()) {
    p.source_span = PieceSpan{j["span"].at(0).get<std::size_t>(), j["span"].at(1).get<std::size_t>()};
  }
  return p;
}

TitleCandidate candidate_from_json(const json& j) {
  TitleCandidate c;
  c.text = j.at("text").get<std::string>();
  c.score = j.at("score").get<double>();
  c.grammar_ok = j.at("grammar_ok").get<bool>();
  if (j.contains("ordering")) c.ordering = j["ordering"].get<std::vector<std::size_t>>();
  return c;
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const std::exception& e) {
  const auto err = error_response(e);
  send_json(res, err.status, err.body);
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error&) {
    throw ValidationError("request body is not valid JSON");
  }
}

}  // namespace

std::string to_string(SessionState s) {
  return s == SessionState::kPartsReady ? "parts_ready" : "generated";
}

std::string new_session_id() {
  static thread_local std::random_device device;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  id.reserve(32);
  for (int i = 0; i < 4; ++i) {
    const std::uint32_t word = device();
    for (int b = 0; b < 4; ++b) {
      const auto byte = static_cast<unsigned>((word >> (8 * b)) & 0xFF);
      id.push_back(kHex[byte >> 4]);
      id.push_back(kHex[byte & 0xF]);
    }
  }
  return id;
}

std::shared_ptr<SessionStore::Slot> SessionStore::insert(Session session) {
  auto slot = std::make_shared<Slot>();
  const std::string id = session.id;
  slot->session = std::move(session);
  std::lock_guard lock(mutex_);
  sessions_[id] = slot;
  return slot;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("unknown session " + id);
  return it->second;
}

std::size_t SessionStore::purge_expired(Clock::time_point now, std::chrono::seconds ttl) {
  std::lock_guard lock(mutex_);
  std::size_t removed = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    // created_at is written once before insertion, so reading it here
    // without the slot lock is safe.
    if (now - it->second->session.created_at > ttl) {
      it = sessions_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

json SessionStore::snapshot() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::lock_guard lock(mutex_);
    for (const auto& [id, slot] : sessions_) slots.push_back(slot);
  }
  json out = json::array();
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mutex);
    out.push_back(session_to_json(slot->session));
  }
  return out;
}

void SessionStore::restore(const json& snapshot) {
  for (const auto& j : snapshot) insert(session_from_json(j));
}

TitleService::TitleService(GenerationModels models, ServiceConfig config)
    : models_(models), config_(std::move(config)) {
  config_.generation.validate();
}

Session TitleService::create_session(const std::string& abstract) {
  const std::string trimmed = text::trim(abstract);
  if (trimmed.empty()) throw ValidationError("abstract is empty");
  if (abstract.size() > config_.max_abstract_chars) {
    throw ValidationError("abstract exceeds " + std::to_string(config_.max_abstract_chars) +
                          " characters");
  }
  KeywordMask mask;
  auto parts = extract_parts(trimmed, models_, config_.generation, &mask);
  if (parts.empty()) throw NoPartsError(mask.scores, mask.threshold_used);

  Session s;
  s.id = new_session_id();
  s.abstract = trimmed;
  s.generated_parts = parts;
  s.current_parts = std::move(parts);
  s.state = SessionState::kPartsReady;
  s.created_at = Clock::now();

  store_.purge_expired(s.created_at, config_.session_ttl);
  store_.insert(s);
  return s;
}

Session TitleService::get_session(const std::string& id) const {
  auto slot = store_.find(id);
  std::lock_guard lock(slot->mutex);
  return slot->session;
}

Session TitleService::update_parts(const std::string& id, const std::vector<std::string>& raw) {
  auto slot = store_.find(id);
  if (raw.empty()) throw ValidationError("parts list is empty");
  if (raw.size() > config_.generation.max_parts) {
    throw ValidationError("too many parts: " + std::to_string(raw.size()) + " > " +
                          std::to_string(config_.generation.max_parts));
  }
  std::vector<TitlePart> parts;
  parts.reserve(raw.size());
  for (const auto& r : raw) parts.push_back(make_user_part(r));

  std::lock_guard lock(slot->mutex);
  slot->session.current_parts = std::move(parts);
  slot->session.candidates.clear();
  slot->session.used_fallback = false;
  slot->session.state = SessionState::kPartsReady;
  return slot->session;
}

Session TitleService::generate_candidates(const std::string& id) {
  auto slot = store_.find(id);
  std::lock_guard lock(slot->mutex);
  GenerationResult r = arrange_parts(slot->session.current_parts, models_, config_.generation);
  slot->session.candidates = std::move(r.candidates);
  slot->session.used_fallback = r.used_fallback;
  slot->session.state = SessionState::kGenerated;
  return slot->session;
}

void TitleService::save_snapshot(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write snapshot " + path.string());
  out << store_.snapshot().dump() << '\n';
}

void TitleService::load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open snapshot " + path.string());
  try {
    store_.restore(json::parse(in));
  } catch (const json::exception& e) {
    throw ValidationError("bad snapshot " + path.string() + ": " + e.what());
  }
  store_.purge_expired(Clock::now(), config_.session_ttl);
}

json part_to_json(const TitlePart& p) {
  json j;
  j["text"] = p.text;
  if (p.source_span) {
    j["span"] = {p.source_span->first, p.source_span->last};
  } else {
    j["span"] = nullptr;
  }
  return j;
}

json candidate_to_json(const TitleCandidate& c) {
  return {{"text", c.text}, {"score", c.score}, {"grammar_ok", c.grammar_ok}};
}

json session_to_json(const Session& s) {
  json j;
  j["session_id"] = s.id;
  j["state"] = to_string(s.state);
  j["abstract"] = s.abstract;
  j["created_at"] = to_unix(s.created_at);
  j["generated_parts"] = json::array();
  for (const auto& p : s.generated_parts) j["generated_parts"].push_back(part_to_json(p));
  j["parts"] = json::array();
  for (const auto& p : s.current_parts) j["parts"].push_back(part_to_json(p));
  j["candidates"] = json::array();
  for (const auto& c : s.candidates) {
    json cj = candidate_to_json(c);
    cj["ordering"] = c.ordering;
    j["candidates"].push_back(std::move(cj));
  }
  j["used_fallback"] = s.used_fallback;
  return j;
}

Session session_from_json(const json& j) {
  Session s;
  s.id = j.at("session_id").get<std::string>();
  s.state = state_from_string(j.at("state").get<std::string>());
  s.abstract = j.at("abstract").get<std::string>();
  s.created_at = Clock::time_point(std::chrono::seconds(j.at("created_at").get<std::int64_t>()));
  for (const auto& p : j.at("generated_parts")) s.generated_parts.push_back(part_from_json(p));
  for (const auto& p : j.at("parts")) s.current_parts.push_back(part_from_json(p));
  for (const auto& c : j.at("candidates")) s.candidates.push_back(candidate_from_json(c));
  s.used_fallback = j.value("used_fallback", false);
  return s;
}

json create_response(const Session& s) {
  json j;
  j["session_id"] = s.id;
  j["state"] = to_string(s.state);
  j["parts"] = json::array();
  for (const auto& p : s.current_parts) j["parts"].push_back(part_to_json(p));
  return j;
}

json parts_response(const Session& s) { return create_response(s); }

json candidates_response(const Session& s) {
  json j;
  j["session_id"] = s.id;
  j["state"] = to_string(s.state);
  j["candidates"] = json::array();
  for (const auto& c : s.candidates) j["candidates"].push_back(candidate_to_json(c));
  j["used_fallback"] = s.used_fallback;
  return j;
}

ErrorResponse error_response(const std::exception& e) {
  ErrorResponse r;
  if (const auto* np = dynamic_cast<const NoPartsError*>(&e)) {
    std::ostringstream detail;
    detail << "no token reached the keyword threshold " << np->threshold() << "; scores:";
    for (double s : np->scores()) detail << ' ' << s;
    r.status = 422;
    r.body = {{"error", "no title parts"}, {"detail", detail.str()}};
    return r;
  }
  std::string kind = "internal error";
  if (dynamic_cast<const NotFoundError*>(&e)) {
    r.status = 404;
    kind = "not found";
  } else if (dynamic_cast<const ValidationError*>(&e)) {
    r.status = 400;
    kind = "validation error";
  } else if (dynamic_cast<const TimeoutError*>(&e)) {
    r.status = 504;
    kind = "timeout";
  } else if (dynamic_cast<const ExternalError*>(&e)) {
    r.status = 502;
    kind = "external component failed";
  }
  r.body = {{"error", kind}, {"detail", e.what()}};
  return r;
}

void register_routes(httplib::Server& server, TitleService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Post("/api/sessions", [&service](const httplib::Request& req, httplib::Response& res) {
    try {
      const json body = parse_body(req);
      if (!body.is_object() || !body.contains("abstract") || !body["abstract"].is_string()) {
        throw ValidationError("body must be {\"abstract\": string}");
      }
      send_json(res, 201, create_response(service.create_session(body["abstract"].get<std::string>())));
    } catch (const std::exception& e) {
      send_error(res, e);
    }
  });

  server.Get(R"(/api/sessions/([0-9a-f]+))",
             [&service](const httplib::Request& req, httplib::Response& res) {
               try {
                 json j = session_to_json(service.get_session(req.matches[1]));
                 for (auto& c : j["candidates"]) c.erase("ordering");
                 send_json(res, 200, j);
               } catch (const std::exception& e) {
                 send_error(res, e);
               }
             });

  server.Put(R"(/api/sessions/([0-9a-f]+)/parts)",
             [&service](const httplib::Request& req, httplib::Response& res) {
               try {
                 const json body = parse_body(req);
                 if (!body.is_object() || !body.contains("parts") || !body["parts"].is_array()) {
                   throw ValidationError("body must be {\"parts\": [string, ...]}");
                 }
                 std::vector<std::string> parts;
                 for (const auto& p : body["parts"]) {
                   if (!p.is_string()) throw ValidationError("parts must be strings");
                   parts.push_back(p.get<std::string>());
                 }
                 send_json(res, 200, parts_response(service.update_parts(req.matches[1], parts)));
               } catch (const std::exception& e) {
                 send_error(res, e);
               }
             });

  server.Post(R"(/api/sessions/([0-9a-f]+)/candidates)",
              [&service](const httplib::Request& req, httplib::Response& res) {
                try {
                  send_json(res, 200,
                            candidates_response(service.generate_candidates(req.matches[1])));
                } catch (const std::exception& e) {
                  send_error(res, e);
                }
              });
}

}  // namespace titlegen::service
