#include "accuscore/game_data.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "accuscore/errors.h"
#include "accuscore/file_util.h"

namespace accuscore {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Field-path aware reader over one record.
class Reader {
 public:
  Reader(const std::string &source) : source_(source) {}

  [[noreturn]] void Fail(const std::string &field, const std::string &what) const {
    throw ParseError(source_, 0, field + ": " + what);
  }

  const json &Require(const json &obj, const std::string &key,
                      const std::string &path) const {
    if (!obj.is_object() || !obj.contains(key)) Fail(path + key, "missing required field");
    return obj.at(key);
  }

  std::string String(const json &value, const std::string &field) const {
    if (!value.is_string()) Fail(field, "expected a string");
    return value.get<std::string>();
  }

  int Count(const json &value, const std::string &field) const {
    if (!value.is_number_integer()) Fail(field, "expected an integer");
    int64_t v = value.get<int64_t>();
    if (v < 0) Fail(field, "must not be negative, got " + std::to_string(v));
    if (v > 1000000) Fail(field, "implausibly large value " + std::to_string(v));
    return static_cast<int>(v);
  }

  // Integer, or absent for null / "N/A" / "".
  std::optional<int> OptionalCount(const json &value, const std::string &field) const {
    if (value.is_null()) return std::nullopt;
    if (value.is_string()) {
      std::string s = value.get<std::string>();
      if (s.empty() || s == "N/A" || s == "NA") return std::nullopt;
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        Fail(field, "expected an integer, got \"" + s + "\"");
      }
      if (v < 0) Fail(field, "must not be negative, got " + s);
      return v;
    }
    return Count(value, field);
  }

 private:
  const std::string &source_;
};

TeamLine ParseTeam(const Reader &r, const json &obj, const std::string &side) {
  if (!obj.is_object()) r.Fail(side, "expected an object");
  std::string path = side + ".";
  TeamLine team;
  team.nickname = r.String(r.Require(obj, "name", path), path + "name");
  if (team.nickname.empty()) r.Fail(path + "name", "must not be empty");
  if (obj.contains("city")) team.city = r.String(obj["city"], path + "city");
  team.wins = r.Count(r.Require(obj, "wins", path), path + "wins");
  team.losses = r.Count(r.Require(obj, "losses", path), path + "losses");
  team.points = r.Count(r.Require(obj, "points", path), path + "points");
  if (obj.contains("quarter_points") && !obj["quarter_points"].is_null()) {
    const json &q = obj["quarter_points"];
    if (!q.is_array()) r.Fail(path + "quarter_points", "expected an array");
    for (size_t i = 0; i < q.size(); ++i) {
      team.quarter_points.push_back(
          r.Count(q[i], path + "quarter_points[" + std::to_string(i) + "]"));
    }
    if (!team.quarter_points.empty() && team.quarter_points.size() < 4) {
      r.Fail(path + "quarter_points",
             "expected at least 4 periods, got " +
                 std::to_string(team.quarter_points.size()));
    }
    int sum = std::accumulate(team.quarter_points.begin(),
                              team.quarter_points.end(), 0);
    if (!team.quarter_points.empty() && sum != team.points) {
      r.Fail(path + "quarter_points",
             "periods sum to " + std::to_string(sum) + " but points is " +
                 std::to_string(team.points));
    }
  }
  return team;
}

bool SameTeam(const TeamLine &team, std::string_view name) {
  std::string key = Lower(name);
  return key == Lower(team.nickname) || key == Lower(team.full_name());
}

}  // namespace

std::string TeamLine::full_name() const {
  return city.empty() ? nickname : city + " " + nickname;
}

std::optional<int> TeamLine::PeriodPoints(int first_quarter, int last_quarter) const {
  if (first_quarter < 1 || last_quarter > static_cast<int>(quarter_points.size()) ||
      first_quarter > last_quarter) {
    return std::nullopt;
  }
  int sum = 0;
  for (int q = first_quarter; q <= last_quarter; ++q) sum += quarter_points[q - 1];
  return sum;
}

std::optional<int> PlayerLine::Stat(std::string_view key) const {
  auto it = stats.find(std::string(key));
  if (it == stats.end()) return std::nullopt;
  return it->second;
}

const TeamLine *GameData::FindTeam(std::string_view name) const {
  if (SameTeam(home, name)) return &home;
  if (SameTeam(away, name)) return &away;
  return nullptr;
}

std::optional<std::chrono::year_month_day> ParseDate(std::string_view text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  std::string s(text);
  if (s.size() != 10 || std::sscanf(s.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    return std::nullopt;
  }
  std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{m},
                                   std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string FormatDate(std::chrono::year_month_day date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

std::string_view DayOfWeek(std::chrono::year_month_day date) {
  static constexpr std::string_view kNames[] = {
      "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday"};
  std::chrono::weekday wd{std::chrono::sys_days{date}};
  return kNames[wd.c_encoding()];
}

GameData ParseGame(std::string_view json_text, const std::string &source) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  Reader r(source);
  if (!root.is_object()) r.Fail("(root)", "expected an object");

  GameData game;
  game.game_id = r.String(r.Require(root, "game_id", ""), "game_id");
  if (game.game_id.empty()) r.Fail("game_id", "must not be empty");
  std::string date = r.String(r.Require(root, "date", ""), "date");
  std::optional<std::chrono::year_month_day> parsed = ParseDate(date);
  if (!parsed) r.Fail("date", "expected YYYY-MM-DD, got \"" + date + "\"");
  game.date = *parsed;
  if (root.contains("arena") && !root["arena"].is_null()) {
    game.arena = r.String(root["arena"], "arena");
  }
  game.home = ParseTeam(r, r.Require(root, "home", ""), "home");
  game.away = ParseTeam(r, r.Require(root, "away", ""), "away");

  if (root.contains("players")) {
    const json &players = root["players"];
    if (!players.is_array()) r.Fail("players", "expected an array");
    for (size_t i = 0; i < players.size(); ++i) {
      std::string path = "players[" + std::to_string(i) + "].";
      const json &p = players[i];
      if (!p.is_object()) r.Fail(path, "expected an object");
      PlayerLine line;
      line.name = r.String(r.Require(p, "name", path), path + "name");
      line.team = r.String(r.Require(p, "team", path), path + "team");
      if (!game.FindTeam(line.team)) {
        r.Fail(path + "team", "\"" + line.team + "\" is neither home nor away");
      }
      if (p.contains("stats")) {
        if (!p["stats"].is_object()) r.Fail(path + "stats", "expected an object");
        for (const auto &[key, value] : p["stats"].items()) {
          std::string upper = key;
          for (char &c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          line.stats[upper] = r.OptionalCount(value, path + "stats." + key);
        }
      }
      const TeamLine *team = game.FindTeam(line.team);
      if (std::optional<int> pts = line.points(); pts && *pts > team->points) {
        r.Fail(path + "stats.PTS",
               line.name + " scored " + std::to_string(*pts) + " but " +
                   team->full_name() + " scored " + std::to_string(team->points));
      }
      game.players.push_back(std::move(line));
    }
  }

  static const char *kKnown[] = {"game_id", "date", "arena", "home", "away", "players"};
  for (const auto &[key, value] : root.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      game.extra[key] = value;
    }
  }
  return game;
}

GameData LoadGame(const fs::path &path) {
  return ParseGame(ReadFile(path), path.string());
}

std::map<std::string, GameData, std::less<>> LoadGames(const fs::path &dir) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + ": games directory not found");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::map<std::string, GameData, std::less<>> games;
  for (const fs::path &file : files) {
    GameData game = LoadGame(file);
    std::string id = game.game_id;
    if (!games.emplace(id, std::move(game)).second) {
      throw Error(file.string() + ": duplicate game_id \"" + id + "\"");
    }
  }
  return games;
}

json GameToJson(const GameData &game) {
  auto team = [](const TeamLine &t) {
    json j = {{"name", t.nickname}, {"wins", t.wins}, {"losses", t.losses},
              {"points", t.points}};
    if (!t.city.empty()) j["city"] = t.city;
    if (!t.quarter_points.empty()) j["quarter_points"] = t.quarter_points;
    return j;
  };
  json out = game.extra.is_object() ? game.extra : json::object();
  out["game_id"] = game.game_id;
  out["date"] = FormatDate(game.date);
  if (!game.arena.empty()) out["arena"] = game.arena;
  out["home"] = team(game.home);
  out["away"] = team(game.away);
  json players = json::array();
  for (const PlayerLine &p : game.players) {
    json stats = json::object();
    for (const auto &[key, value] : p.stats) {
      stats[key] = value ? json(*value) : json(nullptr);
    }
    players.push_back({{"name", p.name}, {"team", p.team}, {"stats", stats}});
  }
  out["players"] = players;
  return out;
}

}  // namespace accuscore
