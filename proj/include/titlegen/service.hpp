#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "titlegen/arranger.hpp"
#include "titlegen/error.hpp"

namespace httplib {
class Server;
}

namespace titlegen::service {

enum class SessionState { kPartsReady, kGenerated };

std::string to_string(SessionState s);

struct Session {
  std::string id;
  std::string abstract;
  std::vector<TitlePart> generated_parts;
  std::vector<TitlePart> current_parts;
  std::vector<TitleCandidate> candidates;
  bool used_fallback = false;
  SessionState state = SessionState::kPartsReady;
  std::chrono::system_clock::time_point created_at;
};

// Raised when keyword extraction yields nothing; carries the token scores
// for the client to show.
class NoPartsError : public ValidationError {
 public:
  explicit NoPartsError(std::vector<double> scores, double threshold)
      : ValidationError("no title parts"), scores_(std::move(scores)), threshold_(threshold) {}
  const std::vector<double>& scores() const { return scores_; }
  double threshold() const { return threshold_; }

 private:
  std::vector<double> scores_;
  double threshold_;
};

struct ServiceConfig {
  GenerationConfig generation;
  std::size_t max_abstract_chars = 10000;
  std::chrono::seconds session_ttl{24 * 3600};
};

// 32 hex characters from 16 random bytes.
std::string new_session_id();

// Synchronized map of sessions. Each session has its own lock so work on
// one session never blocks another.
class SessionStore {
 public:
  struct Slot {
    std::mutex mutex;
    Session session;
  };

  std::shared_ptr<Slot> insert(Session session);
  // Throws NotFoundError.
  std::shared_ptr<Slot> find(const std::string& id) const;
  std::size_t purge_expired(std::chrono::system_clock::time_point now,
                            std::chrono::seconds ttl);
  std::size_t size() const;

  nlohmann::json snapshot() const;
  void restore(const nlohmann::json& snapshot);

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

// The human-in-the-loop flow: abstract -> parts -> edited parts ->
// candidates. Models are shared, immutable inputs.
class TitleService {
 public:
  TitleService(GenerationModels models, ServiceConfig config);

  Session create_session(const std::string& abstract);
  Session get_session(const std::string& id) const;
  Session update_parts(const std::string& id, const std::vector<std::string>& parts);
  Session generate_candidates(const std::string& id);

  const ServiceConfig& config() const { return config_; }
  SessionStore& store() { return store_; }

  void save_snapshot(const std::filesystem::path& path) const;
  void load_snapshot(const std::filesystem::path& path);

 private:
  GenerationModels models_;
  ServiceConfig config_;
  SessionStore store_;
};

nlohmann::json part_to_json(const TitlePart& p);
nlohmann::json candidate_to_json(const TitleCandidate& c);
nlohmann::json session_to_json(const Session& s);
Session session_from_json(const nlohmann::json& j);

// Response bodies for each endpoint.
nlohmann::json create_response(const Session& s);
nlohmann::json parts_response(const Session& s);
nlohmann::json candidates_response(const Session& s);

// {error, detail} body and status for an exception thrown by the service.
struct ErrorResponse {
  int status = 500;
  nlohmann::json body;
};
ErrorResponse error_response(const std::exception& e);

// POST /api/sessions, GET /api/sessions/{id}, PUT /api/sessions/{id}/parts,
// POST /api/sessions/{id}/candidates.
void register_routes(httplib::Server& server, TitleService& service);

}  // namespace titlegen::service
