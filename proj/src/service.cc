#include "accuscore/service.h"

#include <cctype>

#include "accuscore/errors.h"
#include "accuscore/file_util.h"
#include "accuscore/mistake_io.h"
#include "accuscore/tokenizer.h"
#include "accuscore/validate.h"
#include "httplib.h"

namespace accuscore {

using nlohmann::json;
namespace fs = std::filesystem;

std::string_view SessionStatusName(SessionStatus status) {
  switch (status) {
    case SessionStatus::kNone: return "NONE";
    case SessionStatus::kInProgress: return "IN_PROGRESS";
    case SessionStatus::kSubmitted: return "SUBMITTED";
  }
  return "NONE";
}

bool IsSafeId(std::string_view id) {
  if (id.empty() || id.size() > 200 || id.front() == '.') return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

namespace {

ApiResponse ErrorResponse(int status, const std::string &message) {
  return {status, json{{"error", message}}};
}

json IssueJson(const ValidationIssue &issue) {
  return {{"severity", SeverityName(issue.severity)},
          {"code", issue.code},
          {"doc_id", issue.doc_id},
          {"mistake_id", issue.mistake_id},
          {"message", issue.message}};
}

json MistakeJson(const Mistake &m) {
  return {{"mistake_id", m.mistake_id},
          {"doc_id", m.doc_id},
          {"start_token", m.span.start},
          {"end_token", m.span.end},
          {"text", m.text},
          {"category", CategoryName(m.category)}};
}

}  // namespace

AnnotationService::AnnotationService(
    Corpus corpus, std::map<std::string, GameData, std::less<>> games,
    fs::path annotations_dir)
    : corpus_(std::move(corpus)),
      games_(std::move(games)),
      annotations_dir_(std::move(annotations_dir)) {
  fs::create_directories(annotations_dir_);
}

fs::path AnnotationService::DraftPath(std::string_view annotator,
                                      std::string_view doc_id) const {
  return annotations_dir_ / std::string(annotator) / (std::string(doc_id) + ".csv");
}

fs::path AnnotationService::MarkerPath(std::string_view annotator,
                                       std::string_view doc_id) const {
  return annotations_dir_ / std::string(annotator) /
         (std::string(doc_id) + ".submitted");
}

std::mutex &AnnotationService::SessionMutex(std::string_view annotator,
                                            std::string_view doc_id) {
  std::string key = std::string(annotator) + "/" + std::string(doc_id);
  std::lock_guard<std::mutex> lock(sessions_mu_);
  auto &slot = sessions_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

SessionStatus AnnotationService::Status(std::string_view annotator,
                                        std::string_view doc_id) const {
  if (!IsSafeId(annotator) || !IsSafeId(doc_id)) return SessionStatus::kNone;
  if (fs::exists(MarkerPath(annotator, doc_id))) return SessionStatus::kSubmitted;
  if (fs::exists(DraftPath(annotator, doc_id))) return SessionStatus::kInProgress;
  return SessionStatus::kNone;
}

ApiResponse AnnotationService::ListDocs(std::string_view annotator) const {
  if (!annotator.empty() && !IsSafeId(annotator)) {
    return ErrorResponse(400, "invalid annotator id");
  }
  json docs = json::array();
  for (const auto &[id, doc] : corpus_.documents()) {
    json entry = {{"doc_id", id},
                  {"system_id", doc.system_id ? json(*doc.system_id) : json(nullptr)},
                  {"token_count", doc.token_count()}};
    if (!annotator.empty()) {
      entry["annotation_status"] = SessionStatusName(Status(annotator, id));
    }
    docs.push_back(std::move(entry));
  }
  return {200, docs};
}

ApiResponse AnnotationService::GetDoc(std::string_view doc_id) const {
  const Document *doc = corpus_.Find(doc_id);
  if (doc == nullptr) return ErrorResponse(404, "unknown document");
  json out = {{"doc_id", doc->doc_id},
              {"tokens", doc->tokens},
              {"system_id", doc->system_id ? json(*doc->system_id) : json(nullptr)},
              {"game_id", doc->game_id ? json(*doc->game_id) : json(nullptr)},
              {"reference_text", nullptr},
              {"box_score_url", nullptr}};
  if (doc->game_id) {
    if (auto ref = corpus_.ReferenceText(*doc->game_id)) out["reference_text"] = *ref;
    out["box_score_url"] =
        "https://www.basketball-reference.com/boxscores/" + *doc->game_id + ".html";
  }
  return {200, out};
}

ApiResponse AnnotationService::GetGame(std::string_view game_id) const {
  auto it = games_.find(game_id);
  if (it == games_.end()) return ErrorResponse(404, "unknown game");
  return {200, GameToJson(it->second)};
}

ApiResponse AnnotationService::GetAnnotations(std::string_view annotator,
                                              std::string_view doc_id) const {
  if (!IsSafeId(annotator)) return ErrorResponse(400, "invalid annotator id");
  if (corpus_.Find(doc_id) == nullptr) return ErrorResponse(404, "unknown document");
  json entries = json::array();
  fs::path path = DraftPath(annotator, doc_id);
  if (fs::exists(path)) {
    MistakeList list = LoadMistakeList(path, ListRole::kGold);
    for (const Mistake &m : list.ForDocument(doc_id)) entries.push_back(MistakeJson(m));
  }
  return {200, json{{"annotator", annotator},
                    {"doc_id", doc_id},
                    {"status", SessionStatusName(Status(annotator, doc_id))},
                    {"entries", entries}}};
}

ApiResponse AnnotationService::PutDraft(std::string_view annotator,
                                        std::string_view doc_id,
                                        std::string_view body) {
  if (!IsSafeId(annotator)) return ErrorResponse(400, "invalid annotator id");
  const Document *doc = corpus_.Find(doc_id);
  if (doc == nullptr) return ErrorResponse(404, "unknown document");

  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_array()) {
    return ErrorResponse(400, "body must be a JSON array of {start_token, end_token, category}");
  }

  std::vector<ValidationIssue> issues;
  std::vector<Mistake> entries;
  for (size_t i = 0; i < parsed.size(); ++i) {
    const json &e = parsed[i];
    std::string id = "#" + std::to_string(i);
    if (!e.is_object() || !e.contains("start_token") || !e.contains("end_token") ||
        !e.contains("category") || !e["start_token"].is_number_integer() ||
        !e["end_token"].is_number_integer() || !e["category"].is_string()) {
      return ErrorResponse(400, "entry " + id +
                                    " needs integer start_token, end_token and a "
                                    "string category");
    }
    Mistake m;
    m.doc_id = doc->doc_id;
    m.span = {e["start_token"].get<int>(), e["end_token"].get<int>()};
    std::optional<Category> category = ParseCategory(e["category"].get<std::string>());
    if (!category) {
      issues.push_back({Severity::kError, std::string(kBadCategory), doc->doc_id, id,
                        "unknown category \"" + e["category"].get<std::string>() + "\""});
      continue;
    }
    m.category = *category;
    if (m.span.well_formed() && m.span.end < doc->token_count()) {
      m.text = SpanText(doc->tokens, m.span);
    }
    entries.push_back(std::move(m));
  }

  MistakeList list(ListRole::kGold, std::move(entries));
  std::vector<ValidationIssue> found = ValidateDocumentMistakes(list.entries(), *doc);
  issues.insert(issues.end(), found.begin(), found.end());
  if (HasErrors(issues)) {
    json out = json::array();
    for (const ValidationIssue &issue : issues) out.push_back(IssueJson(issue));
    return {422, json{{"issues", out}}};
  }

  std::lock_guard<std::mutex> lock(SessionMutex(annotator, doc_id));
  if (fs::exists(MarkerPath(annotator, doc_id))) {
    return ErrorResponse(409, "session already submitted");
  }
  fs::create_directories(DraftPath(annotator, doc_id).parent_path());
  WriteFileAtomically(DraftPath(annotator, doc_id), SerializeMistakeList(list));

  json warnings = json::array();
  for (const ValidationIssue &issue : issues) warnings.push_back(IssueJson(issue));
  json saved = json::array();
  for (const Mistake &m : list.entries()) saved.push_back(MistakeJson(m));
  return {200, json{{"status", SessionStatusName(SessionStatus::kInProgress)},
                    {"entries", saved},
                    {"warnings", warnings}}};
}

ApiResponse AnnotationService::Submit(std::string_view annotator,
                                      std::string_view doc_id) {
  if (!IsSafeId(annotator)) return ErrorResponse(400, "invalid annotator id");
  if (corpus_.Find(doc_id) == nullptr) return ErrorResponse(404, "unknown document");
  std::lock_guard<std::mutex> lock(SessionMutex(annotator, doc_id));
  fs::path draft = DraftPath(annotator, doc_id);
  fs::create_directories(draft.parent_path());
  // An error-free text is a legitimate submission.
  if (!fs::exists(draft)) {
    WriteFileAtomically(draft, SerializeMistakeList(MistakeList(ListRole::kGold)));
  }
  if (!fs::exists(MarkerPath(annotator, doc_id))) {
    WriteFileAtomically(MarkerPath(annotator, doc_id), "");
  }
  return {200, json{{"status", SessionStatusName(SessionStatus::kSubmitted)}}};
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(AnnotationService &service, fs::path static_dir)
    : impl_(std::make_unique<Impl>()) {
  httplib::Server &svr = impl_->server;
  // httplib's default sets SO_REUSEPORT, which lets a second server share a
  // busy port silently.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  auto reply = [](httplib::Response &res, const ApiResponse &api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json; charset=utf-8");
  };
  auto annotator_of = [](const httplib::Request &req) {
    if (req.has_param("annotator")) return req.get_param_value("annotator");
    return req.get_header_value("X-Annotator");
  };

  svr.Get("/api/docs", [&service, reply, annotator_of](const httplib::Request &req,
                                                       httplib::Response &res) {
    reply(res, service.ListDocs(annotator_of(req)));
  });
  svr.Get(R"(/api/docs/([^/]+))",
          [&service, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, service.GetDoc(req.matches[1].str()));
          });
  svr.Get(R"(/api/games/([^/]+))",
          [&service, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, service.GetGame(req.matches[1].str()));
          });
  svr.Get(R"(/api/annotations/([^/]+)/([^/]+))",
          [&service, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, service.GetAnnotations(req.matches[1].str(), req.matches[2].str()));
          });
  svr.Post(R"(/api/annotations/([^/]+)/([^/]+)/submit)",
           [&service, reply](const httplib::Request &req, httplib::Response &res) {
             reply(res, service.Submit(req.matches[1].str(), req.matches[2].str()));
           });
  svr.Post(R"(/api/annotations/([^/]+)/([^/]+))",
           [&service, reply](const httplib::Request &req, httplib::Response &res) {
             reply(res, service.PutDraft(req.matches[1].str(), req.matches[2].str(),
                                         req.body));
           });
  svr.set_exception_handler([reply](const httplib::Request &, httplib::Response &res,
                                    std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception &e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, ErrorResponse(500, what));
  });
  if (!static_dir.empty()) svr.set_mount_point("/", static_dir.string());
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string &host, int port) {
  httplib::Server &svr = impl_->server;
  if (port == 0) {
    int bound = svr.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host + " to a free port");
    return bound;
  }
  if (!svr.bind_to_port(host, port)) {
    throw Error("cannot bind " + host + ":" + std::to_string(port) +
                " (port busy or not permitted)");
  }
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace accuscore
