#ifndef ACCUSCORE_GAME_DATA_H_
#define ACCUSCORE_GAME_DATA_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace accuscore {

struct TeamLine {
  std::string city;      // "Memphis"
  std::string nickname;  // "Grizzlies"
  int wins = 0;
  int losses = 0;
  int points = 0;
  std::vector<int> quarter_points;  // empty when unknown

  std::string full_name() const;
  // Sum of the given 1-based quarters, if quarter data is present.
  std::optional<int> PeriodPoints(int first_quarter, int last_quarter) const;
};

struct PlayerLine {
  std::string name;
  std::string team;  // nickname or full name of the home or away team
  // Box-score columns by their upper-case key (PTS, REB, AST, ...). A player
  // who did not play has absent values, which is different from zero.
  std::map<std::string, std::optional<int>> stats;

  std::optional<int> Stat(std::string_view key) const;
  std::optional<int> points() const { return Stat("PTS"); }
  std::optional<int> rebounds() const { return Stat("REB"); }
  std::optional<int> assists() const { return Stat("AST"); }
};

struct GameData {
  std::string game_id;
  std::chrono::year_month_day date;
  std::string arena;
  TeamLine home;
  TeamLine away;
  std::vector<PlayerLine> players;
  nlohmann::json extra = nlohmann::json::object();  // unrecognized fields

  // home or away by nickname or full name, case-insensitive.
  const TeamLine *FindTeam(std::string_view name) const;
};

// Parses and validates one game record (JSON). Required: game_id, date
// (YYYY-MM-DD), home, away; each team needs name, wins, losses, points.
// Optional: arena, city, quarter_points, players, and any extra fields.
// Throws ParseError naming the source and field for missing fields, negative
// values, quarter sums that differ from the total, a player whose team did
// not play, or a player outscoring their team.
GameData ParseGame(std::string_view json_text, const std::string &source);
GameData LoadGame(const std::filesystem::path &path);

// Every *.json under dir, keyed by game_id.
std::map<std::string, GameData, std::less<>> LoadGames(
    const std::filesystem::path &dir);

nlohmann::json GameToJson(const GameData &game);

// English weekday name of a civil date, e.g. "Wednesday".
std::string_view DayOfWeek(std::chrono::year_month_day date);

std::optional<std::chrono::year_month_day> ParseDate(std::string_view text);
std::string FormatDate(std::chrono::year_month_day date);

}  // namespace accuscore

#endif  // ACCUSCORE_GAME_DATA_H_
