#ifndef ACCUSCORE_BASELINE_H_
#define ACCUSCORE_BASELINE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "accuscore/corpus.h"
#include "accuscore/game_data.h"
#include "accuscore/mistake.h"

namespace accuscore {

enum class ClaimKind { kNumeric, kEntity, kWeekday };

// Attribute names used by claims.
namespace attr {
inline constexpr std::string_view kWins = "wins";
inline constexpr std::string_view kLosses = "losses";
inline constexpr std::string_view kTeamPoints = "points";
inline constexpr std::string_view kFirstHalf = "first_half";
inline constexpr std::string_view kSecondHalf = "second_half";
inline constexpr std::string_view kArena = "arena";
inline constexpr std::string_view kTeam = "team";
inline constexpr std::string_view kPlayer = "player";
inline constexpr std::string_view kWeekday = "weekday";
// Player stats use the box-score key (PTS, REB, ...); quarters use q1..q4.
}  // namespace attr

struct Claim {
  TokenSpan span;
  ClaimKind kind = ClaimKind::kNumeric;
  int sentence = 0;                      // 0-based, split on "."
  std::optional<std::string> subject;    // player or team full name
  std::optional<std::string> attribute;  // see attr
  std::string value;                     // surface text
  std::optional<int> number;             // numeric claims only
  bool lede = false;                     // entity claims: in first sentence
  std::optional<int> pair_id;            // the two halves of an "A - B" score
};

// Value of a digit string or a spelled-out number up to one hundred
// ("seven", "Twenty", "twenty-one", "one hundred").
std::optional<int> ParseNumberToken(std::string_view token);

// Rule-based claim extraction. Player and team mentions come from the game's
// rosters plus the league team list; each number is tied to the nearest
// preceding mention in its sentence and to a stat keyword within three
// tokens. Records "( W - L )" attach to the team mention just before them;
// score pairs "A - B" attach to the two teams in first-mention order.
// Numbers next to season-average cues are left unresolved.
std::vector<Claim> ExtractClaims(const Document &doc, const GameData &game);

// Turns disagreeing claims into NUMBER or NAME mistakes. Claims without a
// subject or attribute, or whose value is absent from the game, yield
// nothing. Throws Error if doc is linked to a different game.
MistakeList CheckClaims(const Document &doc, std::span<const Claim> claims,
                        const GameData &game);

// Extract + check for every document with a game link. Throws Error when a
// document's game is missing from games.
MistakeList RunBaseline(const Corpus &corpus,
                        const std::map<std::string, GameData, std::less<>> &games,
                        int jobs = 1);

}  // namespace accuscore

#endif  // ACCUSCORE_BASELINE_H_
