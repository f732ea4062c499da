#include "accuscore/baseline.h"

#include "accuscore/errors.h"
#include "doctest.h"
#include "testing.h"

namespace accuscore {
namespace {

using nlohmann::json;

Document Figure1Doc() {
  Corpus c = testing::FixtureCorpus();
  return *c.Find("figure1");
}

const Claim *ClaimAt(const std::vector<Claim> &claims, int start) {
  for (const Claim &c : claims) {
    if (c.span.start == start) return &c;
  }
  return nullptr;
}

TEST_CASE("number tokens") {
  CHECK(ParseNumberToken("18") == 18);
  CHECK(ParseNumberToken("0") == 0);
  CHECK(ParseNumberToken("seven") == 7);
  CHECK(ParseNumberToken("Twenty") == 20);
  CHECK(ParseNumberToken("twenty-one") == 21);
  CHECK(ParseNumberToken("hundred") == 100);
  CHECK_FALSE(ParseNumberToken("twenty-ten").has_value());
  CHECK_FALSE(ParseNumberToken("18th").has_value());
  CHECK_FALSE(ParseNumberToken("").has_value());
  CHECK_FALSE(ParseNumberToken("points").has_value());
}

TEST_CASE("player stat claim") {
  GameData game = testing::Figure1Game();
  Document doc = MakeDocument("d", "Marc Gasol scored 18 points .", game.game_id);
  std::vector<Claim> claims = ExtractClaims(doc, game);
  const Claim *c = ClaimAt(claims, 3);
  REQUIRE(c != nullptr);
  CHECK(c->kind == ClaimKind::kNumeric);
  CHECK(c->subject == "Marc Gasol");
  CHECK(c->attribute == "PTS");
  CHECK(c->number == 18);
  CHECK(CheckClaims(doc, claims, game).empty());

  Document wrong = MakeDocument("d", "Gasol scored 17 points and grabbed seven rebounds .",
                                game.game_id);
  MistakeList rml = CheckClaims(wrong, ExtractClaims(wrong, game), game);
  REQUIRE(rml.size() == 1);
  CHECK(rml.entries()[0].span == TokenSpan{2, 2});
  CHECK(rml.entries()[0].category == Category::kNumber);
}

TEST_CASE("team record claims") {
  GameData game = testing::Figure1Game();
  Document doc = MakeDocument("d", "The Memphis Grizzlies ( 5 - 2 ) won .", game.game_id);
  std::vector<Claim> claims = ExtractClaims(doc, game);
  const Claim *wins = ClaimAt(claims, 4);
  const Claim *losses = ClaimAt(claims, 6);
  REQUIRE(wins != nullptr);
  REQUIRE(losses != nullptr);
  CHECK(wins->subject == "Memphis Grizzlies");
  CHECK(wins->attribute == "wins");
  CHECK(wins->number == 5);
  CHECK(losses->attribute == "losses");
  CHECK(losses->number == 2);
  MistakeList rml = CheckClaims(doc, claims, game);
  REQUIRE(rml.size() == 1);
  CHECK(rml.entries()[0].span == TokenSpan{6, 6});
}

TEST_CASE("text without claims") {
  GameData game = testing::Figure1Game();
  Document doc = MakeDocument("d", "It was a fun night for everyone involved .", game.game_id);
  CHECK(CheckClaims(doc, ExtractClaims(doc, game), game).empty());
}

TEST_CASE("season figures and future weekdays are not checked") {
  GameData game = testing::Figure1Game();
  Document doc = MakeDocument(
      "d",
      "Isaiah Thomas is averaging 19 points on the season . The Suns host the "
      "Lakers on Friday . Memphis went on a 12 - 2 run .",
      game.game_id);
  CHECK(CheckClaims(doc, ExtractClaims(doc, game), game).empty());
}

TEST_CASE("game link is required") {
  GameData game = testing::Figure1Game();
  Document unlinked = MakeDocument("d", "Gasol scored 17 points .");
  CHECK_THROWS_AS(CheckClaims(unlinked, {}, game), Error);
  Document other = MakeDocument("d", "Gasol scored 17 points .", "201911080DEN");
  CHECK_THROWS_AS(CheckClaims(other, {}, game), Error);
}

TEST_CASE("annotated summary end to end") {
  Document doc = Figure1Doc();
  GameData game = testing::Figure1Game();
  MistakeList rml = CheckClaims(doc, ExtractClaims(doc, game), game);
  std::vector<std::pair<TokenSpan, Category>> got;
  for (const Mistake &m : rml.entries()) got.emplace_back(m.span, m.category);
  std::vector<std::pair<TokenSpan, Category>> want = {
      {{6, 6}, Category::kNumber},   {{17, 17}, Category::kName},
      {{23, 26}, Category::kName},   {{44, 44}, Category::kNumber},
      {{46, 46}, Category::kNumber},
  };
  CHECK(got == want);

  Corpus corpus = testing::FixtureCorpus();
  auto games = LoadGames(testing::Fixture("games"));
  MistakeList all = RunBaseline(corpus, games, 2);
  CHECK(all.ForDocument("figure1").size() == 5);
  CHECK(all == RunBaseline(corpus, games, 1));
}

// Random games and text written from them.
struct Story {
  GameData game;
  std::string text;
  int player_points_token = -1;
};

Story WriteStory(testing::Generator &gen) {
  static const std::pair<const char *, const char *> kTeams[] = {
      {"Boston", "Celtics"}, {"Chicago", "Bulls"},   {"Utah", "Jazz"},
      {"Miami", "Heat"},     {"Portland", "Trail Blazers"}, {"Denver", "Nuggets"},
      {"Golden State", "Warriors"}, {"Phoenix", "Suns"}};
  static const char *kFirst[] = {"Alan", "Boris", "Carl", "Dmitri", "Evan", "Felix"};
  static const char *kLast[] = {"Rowe", "Abbot", "Yates", "Ng", "Okafor", "Lind"};
  static const char *kArenas[] = {"Harbor Arena", "Summit Center", "Lakeside Garden"};

  int h = gen.Int(0, 7), a = gen.Int(0, 6);
  if (a >= h) ++a;
  json j;
  j["game_id"] = "g";
  j["date"] = "20" + std::to_string(gen.Int(10, 24)) + "-0" + std::to_string(gen.Int(1, 9)) +
              "-1" + std::to_string(gen.Int(0, 9));
  j["arena"] = kArenas[gen.Int(0, 2)];
  for (auto [side, t] : {std::pair{"home", h}, std::pair{"away", a}}) {
    std::vector<int> q;
    int total = 0;
    for (int k = 0; k < 4; ++k) {
      q.push_back(gen.Int(15, 40));
      total += q.back();
    }
    j[side] = {{"city", kTeams[t].first}, {"name", kTeams[t].second},
               {"wins", gen.Int(0, 70)},   {"losses", gen.Int(0, 70)},
               {"points", total},          {"quarter_points", q}};
  }
  int p = gen.Int(0, 5);
  std::string player = std::string(kFirst[p]) + " " + kLast[(p + gen.Int(0, 5)) % 6];
  j["players"] = json::array(
      {{{"name", player},
        {"team", kTeams[h].second},
        {"stats", {{"PTS", gen.Int(0, 40)}, {"REB", gen.Int(0, 15)}, {"AST", gen.Int(0, 12)}}}}});

  Story s;
  s.game = ParseGame(j.dump(), "generated");
  const GameData &g = s.game;
  const TeamLine &first = gen.Int(0, 1) ? g.home : g.away;
  const TeamLine &second = &first == &g.home ? g.away : g.home;
  auto record = [](const TeamLine &t) {
    return "( " + std::to_string(t.wins) + " - " + std::to_string(t.losses) + " )";
  };
  std::string lede = "The " + first.full_name() + " " + record(first) + " beat the " +
                     second.full_name() + " " + record(second) + " on " +
                     std::string(DayOfWeek(g.date)) + " , " + std::to_string(first.points) +
                     " - " + std::to_string(second.points) + " .";
  std::string half = "At halftime , the " + g.home.nickname + " led " +
                     std::to_string(*g.home.PeriodPoints(1, 2)) + " - " +
                     std::to_string(*g.away.PeriodPoints(1, 2)) + " .";
  const PlayerLine &pl = g.players[0];
  std::string prefix = pl.name + " scored ";
  std::string stats = std::to_string(*pl.points()) + " points and added " +
                      std::to_string(*pl.assists()) + " assists .";
  std::string venue = "The game was played at the " + g.arena + " .";

  std::string before = lede + " " + half + " " + prefix;
  s.player_points_token = static_cast<int>(Tokenize(before).tokens.size());
  s.text = before + stats + " " + venue;
  return s;
}

TEST_CASE("property: faithful text yields no mistakes") {
  testing::Generator gen(77);
  for (int iter = 0; iter < 300; ++iter) {
    Story s = WriteStory(gen);
    CAPTURE(s.text);
    Document doc = MakeDocument("d", s.text, "g");
    REQUIRE(CheckClaims(doc, ExtractClaims(doc, s.game), s.game).empty());

    // Falsify the player's points.
    std::vector<std::string> tokens = doc.tokens;
    tokens[s.player_points_token] =
        std::to_string(*s.game.players[0].points() + gen.Int(1, 5));
    Document edited = MakeDocument("d", JoinTokens(tokens), "g");
    MistakeList rml = CheckClaims(edited, ExtractClaims(edited, s.game), s.game);
    REQUIRE(rml.size() == 1);
    REQUIRE(rml.entries()[0].span == TokenSpan{s.player_points_token, s.player_points_token});
    REQUIRE(rml.entries()[0].category == Category::kNumber);
  }
}

}  // namespace
}  // namespace accuscore
