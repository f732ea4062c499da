#include "accuscore/service.h"

#include <thread>

#include "accuscore/errors.h"
#include "accuscore/validate.h"
#include "doctest.h"
#include "httplib.h"
#include "testing.h"

namespace accuscore {
namespace {

using nlohmann::json;

AnnotationService MakeService(const testing::TempDir &dir) {
  return AnnotationService(testing::FixtureCorpus(), LoadGames(testing::Fixture("games")),
                           dir / "annotations");
}

TEST_CASE("safe ids") {
  CHECK(IsSafeId("ann_1"));
  CHECK(IsSafeId("figure1"));
  CHECK(IsSafeId("a.b-c"));
  CHECK_FALSE(IsSafeId(""));
  CHECK_FALSE(IsSafeId(".."));
  CHECK_FALSE(IsSafeId(".hidden"));
  CHECK_FALSE(IsSafeId("a/b"));
  CHECK_FALSE(IsSafeId("a b"));
}

TEST_CASE("documents and games") {
  testing::TempDir dir;
  AnnotationService service = MakeService(dir);

  ApiResponse list = service.ListDocs("");
  CHECK(list.status == 200);
  REQUIRE(list.body.size() == 2);
  CHECK(list.body[0]["doc_id"] == "figure1");
  CHECK(list.body[1]["token_count"] == 20);

  ApiResponse doc = service.GetDoc("table1");
  CHECK(doc.status == 200);
  CHECK(doc.body["tokens"].size() == 20);
  CHECK(doc.body["tokens"][8] == "Thursday");
  CHECK(doc.body["system_id"] == "composite");
  CHECK(doc.body["game_id"] == "201911080DEN");
  CHECK(doc.body["reference_text"].is_null());

  ApiResponse fig = service.GetDoc("figure1");
  CHECK(fig.body["reference_text"].is_string());
  CHECK(fig.body["box_score_url"].get<std::string>().find("201411050PHO") !=
        std::string::npos);

  CHECK(service.GetDoc("nope").status == 404);
  CHECK(service.GetGame("201411050PHO").body["home"]["name"] == "Suns");
  CHECK(service.GetGame("nope").status == 404);
}

TEST_CASE("draft, submit and isolation") {
  testing::TempDir dir;
  AnnotationService service = MakeService(dir);
  CHECK(service.Status("ann1", "table1") == SessionStatus::kNone);

  ApiResponse ok = service.PutDraft(
      "ann1", "table1", R"([{"start_token": 8, "end_token": 8, "category": "NAME"}])");
  CHECK(ok.status == 200);
  REQUIRE(ok.body["entries"].size() == 1);
  CHECK(ok.body["entries"][0]["text"] == "Thursday");
  CHECK(service.Status("ann1", "table1") == SessionStatus::kInProgress);

  MistakeList saved = LoadMistakeList(dir / "annotations/ann1/table1.csv", ListRole::kGold);
  REQUIRE(saved.size() == 1);
  CHECK(saved.entries()[0].span == TokenSpan{8, 8});
  CHECK(saved.entries()[0].category == Category::kName);

  ApiResponse got = service.GetAnnotations("ann1", "table1");
  CHECK(got.body["status"] == "IN_PROGRESS");
  CHECK(got.body["entries"].size() == 1);

  // Another annotator sees nothing.
  ApiResponse other = service.GetAnnotations("ann2", "table1");
  CHECK(other.body["entries"].empty());
  CHECK(other.body["status"] == "NONE");
  CHECK(service.ListDocs("ann1").body[1]["annotation_status"] == "IN_PROGRESS");
  CHECK(service.ListDocs("ann2").body[1]["annotation_status"] == "NONE");

  ApiResponse out_of_range = service.PutDraft(
      "ann1", "table1", R"([{"start_token": 99, "end_token": 100, "category": "NAME"}])");
  CHECK(out_of_range.status == 422);
  CHECK(out_of_range.body["issues"][0]["code"] == kSpanOutOfRange);
  ApiResponse bad_category = service.PutDraft(
      "ann1", "table1", R"([{"start_token": 1, "end_token": 1, "category": "COLOUR"}])");
  CHECK(bad_category.status == 422);
  CHECK(service.PutDraft("ann1", "table1", "not json").status == 400);
  CHECK(service.PutDraft("ann1", "table1", R"({"start_token": 1})").status == 400);
  CHECK(service.PutDraft("ann1", "nope", "[]").status == 404);
  CHECK(service.PutDraft("../x", "table1", "[]").status == 400);
  // Rejected requests leave the draft alone.
  CHECK(LoadMistakeList(dir / "annotations/ann1/table1.csv", ListRole::kGold) == saved);

  ApiResponse warn = service.PutDraft("ann1", "table1",
                                      R"([{"start_token": 8, "end_token": 8, "category": "NAME"},
                                          {"start_token": 8, "end_token": 9, "category": "WORD"}])");
  CHECK(warn.status == 200);
  CHECK(warn.body["warnings"].size() == 1);

  CHECK(service.Submit("ann1", "table1").status == 200);
  CHECK(service.Status("ann1", "table1") == SessionStatus::kSubmitted);
  CHECK(service.PutDraft("ann1", "table1", "[]").status == 409);
  CHECK(service.Submit("ann1", "table1").status == 200);
  CHECK(service.Submit("ann1", "nope").status == 404);

  // Submitting with no draft records an empty list.
  CHECK(service.Submit("ann2", "figure1").status == 200);
  CHECK(LoadMistakeList(dir / "annotations/ann2/figure1.csv", ListRole::kGold).empty());
}

TEST_CASE("concurrent drafts for one session") {
  testing::TempDir dir;
  AnnotationService service = MakeService(dir);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&service, t] {
      json body = json::array({{{"start_token", t}, {"end_token", t}, {"category", "WORD"}}});
      for (int k = 0; k < 20; ++k) service.PutDraft("ann", "table1", body.dump());
    });
  }
  for (std::thread &t : threads) t.join();
  MistakeList saved = LoadMistakeList(dir / "annotations/ann/table1.csv", ListRole::kGold);
  CHECK(saved.size() == 1);
}

TEST_CASE("http api") {
  testing::TempDir dir;
  AnnotationService service = MakeService(dir);
  HttpServer server(service);
  int port = server.Bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread listener([&server] { server.Listen(); });

  httplib::Client client("127.0.0.1", port);
  auto docs = client.Get("/api/docs?annotator=ann1");
  REQUIRE(docs);
  CHECK(docs->status == 200);
  CHECK(json::parse(docs->body).size() == 2);

  auto doc = client.Get("/api/docs/table1");
  REQUIRE(doc);
  CHECK(json::parse(doc->body)["tokens"][8] == "Thursday");
  CHECK(client.Get("/api/docs/missing")->status == 404);
  CHECK(client.Get("/api/games/201911080DEN")->status == 200);

  auto post = client.Post("/api/annotations/ann1/table1",
                          R"([{"start_token": 8, "end_token": 8, "category": "NAME"}])",
                          "application/json");
  REQUIRE(post);
  CHECK(post->status == 200);
  auto bad = client.Post("/api/annotations/ann1/table1",
                         R"([{"start_token": 99, "end_token": 100, "category": "NAME"}])",
                         "application/json");
  CHECK(bad->status == 422);
  auto get = client.Get("/api/annotations/ann1/table1");
  CHECK(json::parse(get->body)["entries"][0]["start_token"] == 8);
  CHECK(client.Post("/api/annotations/ann1/table1/submit", "", "application/json")->status ==
        200);
  CHECK(client.Post("/api/annotations/ann1/table1", "[]", "application/json")->status == 409);

  // A second server cannot take the same port.
  HttpServer second(service);
  CHECK_THROWS_AS(second.Bind("127.0.0.1", port), Error);

  server.Stop();
  listener.join();
}

}  // namespace
}  // namespace accuscore
