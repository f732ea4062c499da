#ifndef ACCUSCORE_SERVICE_H_
#define ACCUSCORE_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "accuscore/corpus.h"
#include "accuscore/game_data.h"
#include "accuscore/mistake.h"
#include "json.hpp"

namespace accuscore {

enum class SessionStatus { kNone, kInProgress, kSubmitted };

std::string_view SessionStatusName(SessionStatus status);

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Backend of the annotation UI. Drafts are stored as gold mistake-list CSV
// files at <annotations>/<annotator>/<doc_id>.csv; a submitted session also
// has an empty <doc_id>.submitted marker. The corpus and games are read-only.
// Writes for one (annotator, doc) pair are serialized; everything else is
// lock-free.
class AnnotationService {
 public:
  AnnotationService(Corpus corpus,
                    std::map<std::string, GameData, std::less<>> games,
                    std::filesystem::path annotations_dir);

  // GET /api/docs
  ApiResponse ListDocs(std::string_view annotator) const;
  // GET /api/docs/{doc_id}
  ApiResponse GetDoc(std::string_view doc_id) const;
  // GET /api/games/{game_id}
  ApiResponse GetGame(std::string_view game_id) const;
  // GET /api/annotations/{annotator}/{doc_id}
  ApiResponse GetAnnotations(std::string_view annotator,
                             std::string_view doc_id) const;
  // POST /api/annotations/{annotator}/{doc_id}; body is an array of
  // {start_token, end_token, category}. Replaces the draft.
  ApiResponse PutDraft(std::string_view annotator, std::string_view doc_id,
                       std::string_view body);
  // POST /api/annotations/{annotator}/{doc_id}/submit
  ApiResponse Submit(std::string_view annotator, std::string_view doc_id);

  SessionStatus Status(std::string_view annotator,
                       std::string_view doc_id) const;

 private:
  std::filesystem::path DraftPath(std::string_view annotator,
                                  std::string_view doc_id) const;
  std::filesystem::path MarkerPath(std::string_view annotator,
                                   std::string_view doc_id) const;
  std::mutex &SessionMutex(std::string_view annotator, std::string_view doc_id);

  Corpus corpus_;
  std::map<std::string, GameData, std::less<>> games_;
  std::filesystem::path annotations_dir_;

  std::mutex sessions_mu_;
  std::map<std::string, std::unique_ptr<std::mutex>, std::less<>> sessions_;
};

// Annotator ids and doc ids used in paths: [A-Za-z0-9_.-]+, not starting
// with '.'.
bool IsSafeId(std::string_view id);

// HTTP front end on cpp-httplib.
class HttpServer {
 public:
  explicit HttpServer(AnnotationService &service,
                      std::filesystem::path static_dir = {});
  ~HttpServer();

  // Binds host:port (port 0 picks a free port) and returns the bound port.
  // Throws Error when the port cannot be bound.
  int Bind(const std::string &host, int port);
  // Blocks until Stop().
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace accuscore

#endif  // ACCUSCORE_SERVICE_H_
