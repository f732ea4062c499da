#include "accuscore/baseline.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "accuscore/errors.h"
#include "accuscore/tokenizer.h"
#include "parallel.h"

namespace accuscore {

namespace {

struct LeagueTeam {
  std::string_view city;
  std::string_view nickname;
};

constexpr LeagueTeam kLeagueTeams[] = {
    {"Atlanta", "Hawks"},        {"Boston", "Celtics"},
    {"Brooklyn", "Nets"},        {"Charlotte", "Hornets"},
    {"Chicago", "Bulls"},        {"Cleveland", "Cavaliers"},
    {"Dallas", "Mavericks"},     {"Denver", "Nuggets"},
    {"Detroit", "Pistons"},      {"Golden State", "Warriors"},
    {"Houston", "Rockets"},      {"Indiana", "Pacers"},
    {"Los Angeles", "Clippers"}, {"Los Angeles", "Lakers"},
    {"Memphis", "Grizzlies"},    {"Miami", "Heat"},
    {"Milwaukee", "Bucks"},      {"Minnesota", "Timberwolves"},
    {"New Orleans", "Pelicans"}, {"New York", "Knicks"},
    {"Oklahoma City", "Thunder"}, {"Orlando", "Magic"},
    {"Philadelphia", "76ers"},   {"Phoenix", "Suns"},
    {"Portland", "Trail Blazers"}, {"Sacramento", "Kings"},
    {"San Antonio", "Spurs"},    {"Toronto", "Raptors"},
    {"Utah", "Jazz"},            {"Washington", "Wizards"},
};

constexpr std::string_view kWeekdays[] = {"Sunday",   "Monday", "Tuesday",
                                          "Wednesday", "Thursday", "Friday",
                                          "Saturday"};

constexpr std::string_view kVenueHeads[] = {
    "Arena", "Center", "Centre", "Garden", "Forum", "Coliseum",
    "Fieldhouse", "Palace", "Dome"};

// Words that mark a number as a season or multi-game figure.
constexpr std::string_view kAggregateCues[] = {
    "averaging", "averages", "averaged", "average", "season", "career",
    "per",       "last",     "previous", "past",    "streak", "straight",
    "consecutive"};

// Words that mark a weekday as referring to another game.
constexpr std::string_view kFutureCues[] = {
    "next",   "will",   "upcoming", "host",    "hosts",  "visit", "visits",
    "face",   "faces",  "travel",   "travels", "play",   "plays", "return",
    "returns", "take",  "takes",    "meet",    "meets",  "tomorrow"};

// Tokens following a pair that mark a scoring run or margin, not a score.
constexpr std::string_view kRunCues[] = {"run", "spurt", "lead", "advantage",
                                         "deficit", "record", "mark"};

struct StatKeyword {
  std::string_view word;
  std::string_view key;
};

constexpr StatKeyword kStatKeywords[] = {
    {"points", "PTS"},    {"point", "PTS"},     {"pts", "PTS"},
    {"rebounds", "REB"},  {"rebound", "REB"},   {"boards", "REB"},
    {"assists", "AST"},   {"assist", "AST"},    {"dimes", "AST"},
    {"steals", "STL"},    {"steal", "STL"},     {"blocks", "BLK"},
    {"block", "BLK"},     {"turnovers", "TO"},  {"turnover", "TO"},
    {"minutes", "MIN"},   {"threes", "FG3M"},   {"three-pointers", "FG3M"},
};

template <size_t N>
bool Contains(const std::string_view (&words)[N], std::string_view w) {
  return std::find(std::begin(words), std::end(words), w) != std::end(words);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsCapitalized(std::string_view token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token[0]));
}

bool IsClauseBreak(std::string_view token) {
  return token == "." || token == "," || token == ";" || token == "(" ||
         token == ")";
}

// Letters and digits only, lower-cased.
std::string Squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::vector<std::string> Words(std::string_view s) { return Tokenize(s).tokens; }

enum class MentionType { kPlayer, kTeam };

struct Mention {
  TokenSpan span;
  MentionType type;
  std::string name;  // player name or team full name
  bool in_game = false;
};

struct Surface {
  std::vector<std::string> tokens;
  MentionType type;
  std::string name;
  bool in_game;
};

std::vector<Surface> BuildGazetteer(const GameData &game) {
  std::vector<Surface> forms;
  auto add_team = [&](std::string city, std::string nickname, bool in_game) {
    std::string full = city.empty() ? nickname : city + " " + nickname;
    forms.push_back({Words(full), MentionType::kTeam, full, in_game});
    forms.push_back({Words(nickname), MentionType::kTeam, full, in_game});
    std::vector<std::string> nick = Words(nickname);
    if (nick.size() > 1) {
      forms.push_back({{nick.back()}, MentionType::kTeam, full, in_game});
    }
  };

  std::set<std::string> game_teams = {Lower(game.home.full_name()),
                                      Lower(game.away.full_name())};
  for (const TeamLine *t : {&game.home, &game.away}) {
    add_team(t->city, t->nickname, true);
  }
  for (const LeagueTeam &t : kLeagueTeams) {
    std::string full = std::string(t.city) + " " + std::string(t.nickname);
    bool in_game = game_teams.count(Lower(full)) > 0;
    if (in_game) continue;
    // A game team sharing the nickname shadows the league entry.
    if (game.FindTeam(t.nickname)) {
      forms.push_back({Words(full), MentionType::kTeam, full, false});
      continue;
    }
    add_team(std::string(t.city), std::string(t.nickname), false);
  }

  // Players: full name, plus the surname alone when no other player in the
  // game shares it.
  std::map<std::string, int> surname_count;
  auto surname_of = [](const std::vector<std::string> &w) -> std::string {
    static constexpr std::string_view kSuffixes[] = {"Jr.", "Sr.", "II", "III", "IV"};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (!Contains(kSuffixes, *it)) return *it;
    }
    return {};
  };
  for (const PlayerLine &p : game.players) {
    std::vector<std::string> w = Words(p.name);
    if (w.size() > 1) ++surname_count[surname_of(w)];
  }
  for (const PlayerLine &p : game.players) {
    std::vector<std::string> w = Words(p.name);
    if (w.empty()) continue;
    forms.push_back({w, MentionType::kPlayer, p.name, true});
    if (w.size() > 1) {
      std::string last = surname_of(w);
      if (surname_count[last] == 1) {
        forms.push_back({{last}, MentionType::kPlayer, p.name, true});
      }
    }
  }
  // Longest forms first; teams before players on equal length.
  std::stable_sort(forms.begin(), forms.end(), [](const Surface &a, const Surface &b) {
    if (a.tokens.size() != b.tokens.size()) return a.tokens.size() > b.tokens.size();
    return a.type == MentionType::kTeam && b.type == MentionType::kPlayer;
  });
  return forms;
}

std::vector<Mention> FindMentions(const std::vector<std::string> &tokens,
                                  const std::vector<Surface> &forms) {
  std::vector<Mention> mentions;
  size_t i = 0;
  while (i < tokens.size()) {
    const Surface *hit = nullptr;
    for (const Surface &f : forms) {
      if (i + f.tokens.size() > tokens.size()) continue;
      if (std::equal(f.tokens.begin(), f.tokens.end(), tokens.begin() + i)) {
        hit = &f;
        break;
      }
    }
    if (hit == nullptr) {
      ++i;
      continue;
    }
    int start = static_cast<int>(i);
    int end = start + static_cast<int>(hit->tokens.size()) - 1;
    mentions.push_back({{start, end}, hit->type, hit->name, hit->in_game});
    i = end + 1;
  }
  return mentions;
}

struct NumberAt {
  int value;
  int end;  // last token of the number
};

// Number starting at token i: a single token, or a spelled-out composite
// split by the tokenizer ("twenty - one", "twenty one", "one hundred").
std::optional<NumberAt> ReadNumber(const std::vector<std::string> &tokens, size_t i) {
  std::optional<int> first = ParseNumberToken(tokens[i]);
  if (!first) return std::nullopt;
  int idx = static_cast<int>(i);
  bool spelled = !std::isdigit(static_cast<unsigned char>(tokens[i][0]));
  if (spelled && *first >= 20 && *first % 10 == 0 && *first < 100) {
    if (i + 2 < tokens.size() && tokens[i + 1] == "-") {
      std::optional<int> unit = ParseNumberToken(tokens[i + 2]);
      if (unit && *unit >= 1 && *unit <= 9 &&
          !std::isdigit(static_cast<unsigned char>(tokens[i + 2][0]))) {
        return NumberAt{*first + *unit, idx + 2};
      }
    }
    if (i + 1 < tokens.size()) {
      std::optional<int> unit = ParseNumberToken(tokens[i + 1]);
      if (unit && *unit >= 1 && *unit <= 9 &&
          !std::isdigit(static_cast<unsigned char>(tokens[i + 1][0]))) {
        return NumberAt{*first + *unit, idx + 1};
      }
    }
  }
  if (spelled && *first == 1 && i + 1 < tokens.size() &&
      Lower(tokens[i + 1]) == "hundred") {
    return NumberAt{100, idx + 1};
  }
  return NumberAt{*first, idx};
}

// Period named closest before token i within [sentence_start, i).
std::optional<std::string> PeriodBefore(const std::vector<std::string> &tokens,
                                        int sentence_start, int i) {
  for (int k = i - 1; k >= sentence_start; --k) {
    std::string w = Lower(tokens[k]);
    if (w == "halftime") return std::string(attr::kFirstHalf);
    if (k == sentence_start) break;
    std::string prev = Lower(tokens[k - 1]);
    if (w == "half") {
      if (prev == "first" || prev == "opening") return std::string(attr::kFirstHalf);
      if (prev == "second") return std::string(attr::kSecondHalf);
    }
    if (w == "quarter" || w == "period") {
      if (prev == "first" || prev == "opening") return std::string("q1");
      if (prev == "second") return std::string("q2");
      if (prev == "third") return std::string("q3");
      if (prev == "fourth" || prev == "final") return std::string("q4");
    }
  }
  return std::nullopt;
}

// Plausible score range for a period.
bool PlausibleScore(const std::string &period, int value) {
  if (period == attr::kTeamPoints) return value >= 50 && value <= 200;
  if (period == attr::kFirstHalf || period == attr::kSecondHalf) {
    return value >= 15 && value <= 120;
  }
  return value >= 5 && value <= 70;
}

std::optional<int> ExpectedValue(const Claim &claim, const GameData &game) {
  if (!claim.subject || !claim.attribute) return std::nullopt;
  const std::string &a = *claim.attribute;
  if (const TeamLine *team = game.FindTeam(*claim.subject)) {
    if (a == attr::kWins) return team->wins;
    if (a == attr::kLosses) return team->losses;
    if (a == attr::kTeamPoints) return team->points;
    if (a == attr::kFirstHalf) return team->PeriodPoints(1, 2);
    if (a == attr::kSecondHalf) return team->PeriodPoints(3, 4);
    if (a.size() == 2 && a[0] == 'q') return team->PeriodPoints(a[1] - '0', a[1] - '0');
    return std::nullopt;
  }
  for (const PlayerLine &p : game.players) {
    if (p.name == *claim.subject) return p.Stat(a);
  }
  return std::nullopt;
}

bool SameArena(std::string_view a, std::string_view b) { return Squash(a) == Squash(b); }

}  // namespace

std::optional<int> ParseNumberToken(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (std::all_of(token.begin(), token.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (token.size() > 6) return std::nullopt;
    int value = 0;
    std::from_chars(token.data(), token.data() + token.size(), value);
    return value;
  }
  static constexpr std::string_view kUnits[] = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static constexpr std::string_view kTens[] = {"twenty", "thirty", "forty",
                                               "fifty",  "sixty",  "seventy",
                                               "eighty", "ninety"};
  std::string w = Lower(token);
  auto unit_value = [&](std::string_view s) -> std::optional<int> {
    for (int k = 0; k < 20; ++k) {
      if (s == kUnits[k]) return k;
    }
    return std::nullopt;
  };
  auto tens_value = [&](std::string_view s) -> std::optional<int> {
    for (int k = 0; k < 8; ++k) {
      if (s == kTens[k]) return 20 + 10 * k;
    }
    return std::nullopt;
  };
  if (w == "hundred" || w == "one-hundred") return 100;
  if (auto u = unit_value(w)) return u;
  if (auto t = tens_value(w)) return t;
  size_t dash = w.find('-');
  if (dash != std::string::npos) {
    auto t = tens_value(std::string_view(w).substr(0, dash));
    auto u = unit_value(std::string_view(w).substr(dash + 1));
    if (t && u && *u >= 1 && *u <= 9) return *t + *u;
  }
  return std::nullopt;
}

std::vector<Claim> ExtractClaims(const Document &doc, const GameData &game) {
  const std::vector<std::string> &tokens = doc.tokens;
  const int n = static_cast<int>(tokens.size());

  std::vector<int> sentence_of(n);
  std::vector<int> sentence_start;
  for (int i = 0, s = 0; i < n; ++i) {
    if (i == 0 || tokens[i - 1] == ".") {
      if (i > 0) ++s;
      sentence_start.push_back(i);
    }
    sentence_of[i] = s;
  }

  std::vector<Mention> mentions = FindMentions(tokens, BuildGazetteer(game));
  std::vector<int> mention_at(n, -1);
  for (size_t m = 0; m < mentions.size(); ++m) {
    for (int k = mentions[m].span.start; k <= mentions[m].span.end; ++k) {
      mention_at[k] = static_cast<int>(m);
    }
  }

  std::vector<Claim> claims;
  for (const Mention &m : mentions) {
    Claim c;
    c.span = m.span;
    c.kind = ClaimKind::kEntity;
    c.sentence = sentence_of[m.span.start];
    c.subject = m.name;
    c.attribute = std::string(m.type == MentionType::kTeam ? attr::kTeam : attr::kPlayer);
    c.value = SpanText(tokens, m.span);
    c.lede = c.sentence == 0;
    claims.push_back(std::move(c));
  }

  // Venues: a run of two or more capitalized tokens ending in a venue word.
  for (int i = 1; i < n; ++i) {
    if (!Contains(kVenueHeads, tokens[i]) || mention_at[i] >= 0) continue;
    int start = i;
    while (start > 0 && IsCapitalized(tokens[start - 1]) && mention_at[start - 1] < 0 &&
           sentence_of[start - 1] == sentence_of[i] && tokens[start - 1] != "The") {
      --start;
    }
    if (start == i) continue;
    Claim c;
    c.span = {start, i};
    c.kind = ClaimKind::kEntity;
    c.sentence = sentence_of[i];
    c.subject = "game";
    c.attribute = std::string(attr::kArena);
    c.value = SpanText(tokens, c.span);
    c.lede = c.sentence == 0;
    claims.push_back(std::move(c));
  }

  // Weekdays.
  for (int i = 0; i < n; ++i) {
    if (!Contains(kWeekdays, tokens[i])) continue;
    Claim c;
    c.span = {i, i};
    c.kind = ClaimKind::kWeekday;
    c.sentence = sentence_of[i];
    c.value = tokens[i];
    bool future = false;
    for (int k = sentence_start[c.sentence]; k < n && sentence_of[k] == c.sentence; ++k) {
      if (Contains(kFutureCues, Lower(tokens[k]))) future = true;
    }
    if (!future) {
      c.subject = "game";
      c.attribute = std::string(attr::kWeekday);
    }
    claims.push_back(std::move(c));
  }

  // Numbers.
  std::vector<bool> used(n, false);
  int next_pair = 0;
  auto numeric_claim = [&](const NumberAt &num, int start) {
    Claim c;
    c.span = {start, num.end};
    c.kind = ClaimKind::kNumeric;
    c.sentence = sentence_of[start];
    c.value = SpanText(tokens, c.span);
    c.number = num.value;
    for (int k = start; k <= num.end; ++k) used[k] = true;
    return c;
  };

  for (int i = 0; i < n; ++i) {
    if (used[i] || mention_at[i] >= 0) continue;
    std::optional<NumberAt> first = ReadNumber(tokens, i);
    if (!first) continue;
    const int sentence = sentence_of[i];
    const int s_start = sentence_start[sentence];

    // "( W - L )" right after a team mention.
    if (i > 0 && tokens[i - 1] == "(" && first->end + 2 < n &&
        tokens[first->end + 1] == "-") {
      std::optional<NumberAt> second = ReadNumber(tokens, first->end + 2);
      if (second && second->end + 1 < n && tokens[second->end + 1] == ")") {
        Claim wins = numeric_claim(*first, i);
        Claim losses = numeric_claim(*second, first->end + 2);
        int before = i - 2;
        if (before >= 0 && mention_at[before] >= 0 &&
            mentions[mention_at[before]].type == MentionType::kTeam) {
          wins.subject = losses.subject = mentions[mention_at[before]].name;
          wins.attribute = std::string(attr::kWins);
          losses.attribute = std::string(attr::kLosses);
        }
        claims.push_back(std::move(wins));
        claims.push_back(std::move(losses));
        i = second->end;
        continue;
      }
    }

    // "A - B" score pair.
    if (first->end + 2 < n && tokens[first->end + 1] == "-" &&
        (i == 0 || tokens[i - 1] != "(")) {
      std::optional<NumberAt> second = ReadNumber(tokens, first->end + 2);
      if (second) {
        Claim a = numeric_claim(*first, i);
        Claim b = numeric_claim(*second, first->end + 2);
        std::string period =
            PeriodBefore(tokens, s_start, i).value_or(std::string(attr::kTeamPoints));
        bool run = second->end + 1 < n &&
                   Contains(kRunCues, Lower(tokens[second->end + 1]));
        const Mention *lead_team = nullptr;
        for (const Mention &m : mentions) {
          if (m.span.start >= s_start && m.span.end < i && m.type == MentionType::kTeam) {
            lead_team = &m;
            break;
          }
        }
        if (!run && lead_team && lead_team->in_game &&
            PlausibleScore(period, *a.number) && PlausibleScore(period, *b.number)) {
          const TeamLine *t1 = game.FindTeam(lead_team->name);
          const TeamLine *t2 = t1 == &game.home ? &game.away : &game.home;
          a.subject = t1->full_name();
          b.subject = t2->full_name();
          a.attribute = b.attribute = period;
          a.pair_id = b.pair_id = next_pair++;
        }
        claims.push_back(std::move(a));
        claims.push_back(std::move(b));
        i = second->end;
        continue;
      }
    }

    Claim c = numeric_claim(*first, i);
    i = first->end;

    // "3 - pointers" and similar compounds are not counts.
    if (first->end + 2 < n && tokens[first->end + 1] == "-") {
      claims.push_back(std::move(c));
      continue;
    }
    bool aggregate = false;
    for (int k = std::max(s_start, c.span.start - 3);
         k <= std::min(n - 1, c.span.end + 4); ++k) {
      if (Contains(kAggregateCues, Lower(tokens[k]))) aggregate = true;
    }
    std::optional<std::string> stat;
    for (int k = c.span.end + 1; k <= std::min(n - 1, c.span.end + 3); ++k) {
      if (IsClauseBreak(tokens[k])) break;
      std::string w = Lower(tokens[k]);
      for (const StatKeyword &kw : kStatKeywords) {
        if (w == kw.word) stat = std::string(kw.key);
      }
      if (stat) break;
    }
    if (aggregate || !stat) {
      claims.push_back(std::move(c));
      continue;
    }

    // Nearest preceding mention in the sentence. A team is only used when
    // no player precedes it in the sentence, and any unknown capitalized
    // word between the mention and the number makes the subject ambiguous.
    int nearest = -1;
    bool player_earlier = false;
    for (size_t m = 0; m < mentions.size(); ++m) {
      if (mentions[m].span.start < s_start || mentions[m].span.end >= c.span.start) continue;
      if (nearest >= 0 && mentions[nearest].type == MentionType::kPlayer) {
        player_earlier = true;
      }
      nearest = static_cast<int>(m);
    }
    if (nearest >= 0) {
      const Mention &m = mentions[nearest];
      bool ambiguous = false;
      for (int k = m.span.end + 1; k < c.span.start; ++k) {
        if (IsCapitalized(tokens[k]) && mention_at[k] < 0) ambiguous = true;
      }
      if (m.type == MentionType::kPlayer && !ambiguous) {
        c.subject = m.name;
        c.attribute = stat;
      } else if (m.type == MentionType::kTeam && !player_earlier && !ambiguous &&
                 m.in_game && *stat == "PTS") {
        c.subject = m.name;
        c.attribute = std::string(attr::kTeamPoints);
      }
    }
    claims.push_back(std::move(c));
  }

  std::stable_sort(claims.begin(), claims.end(), [](const Claim &a, const Claim &b) {
    return a.span < b.span;
  });
  return claims;
}

MistakeList CheckClaims(const Document &doc, std::span<const Claim> claims,
                        const GameData &game) {
  if (!doc.game_id) {
    throw Error("document " + doc.doc_id + " is not linked to a game");
  }
  if (*doc.game_id != game.game_id) {
    throw Error("document " + doc.doc_id + " is linked to game " + *doc.game_id +
                ", not " + game.game_id);
  }

  std::vector<Mistake> found;
  auto report = [&](TokenSpan span, Category category) {
    for (const Mistake &m : found) {
      if (m.span == span && m.category == category) return;
    }
    Mistake m;
    m.doc_id = doc.doc_id;
    m.span = span;
    m.text = SpanText(doc.tokens, span);
    m.category = category;
    found.push_back(std::move(m));
  };

  // Score pairs may be written winner-first regardless of which team was
  // named first; use the assignment that explains more of the numbers.
  std::map<int, std::vector<const Claim *>> pairs;
  for (const Claim &c : claims) {
    if (c.pair_id) pairs[*c.pair_id].push_back(&c);
  }
  std::map<const Claim *, std::optional<int>> pair_expected;
  for (const auto &[id, members] : pairs) {
    if (members.size() != 2) continue;
    const Claim &a = *members[0];
    const Claim &b = *members[1];
    std::optional<int> ea = ExpectedValue(a, game);
    std::optional<int> eb = ExpectedValue(b, game);
    int straight = (ea && *ea == *a.number) + (eb && *eb == *b.number);
    int swapped = (eb && *eb == *a.number) + (ea && *ea == *b.number);
    if (swapped > straight) std::swap(ea, eb);
    pair_expected[&a] = ea;
    pair_expected[&b] = eb;
  }

  std::string weekday(DayOfWeek(game.date));
  for (const Claim &c : claims) {
    if (!c.subject || !c.attribute) continue;
    switch (c.kind) {
      case ClaimKind::kNumeric: {
        if (!c.number) break;
        std::optional<int> expected =
            c.pair_id && pair_expected.count(&c) ? pair_expected[&c]
                                                 : ExpectedValue(c, game);
        if (expected && *expected != *c.number) report(c.span, Category::kNumber);
        break;
      }
      case ClaimKind::kWeekday:
        if (Lower(c.value) != Lower(weekday)) report(c.span, Category::kName);
        break;
      case ClaimKind::kEntity:
        if (*c.attribute == attr::kArena) {
          if (!game.arena.empty() && !SameArena(c.value, game.arena)) {
            report(c.span, Category::kName);
          }
        } else if (*c.attribute == attr::kTeam) {
          if (c.lede && !game.FindTeam(*c.subject)) report(c.span, Category::kName);
        }
        break;
    }
  }
  return MistakeList(ListRole::kReported, std::move(found));
}

MistakeList RunBaseline(const Corpus &corpus,
                        const std::map<std::string, GameData, std::less<>> &games,
                        int jobs) {
  std::vector<const Document *> docs;
  for (const auto &[id, doc] : corpus.documents()) {
    if (!doc.game_id) throw Error("document " + id + " is not linked to a game");
    if (games.find(*doc.game_id) == games.end()) {
      throw Error("document " + id + " links to unknown game " + *doc.game_id);
    }
    docs.push_back(&doc);
  }
  std::vector<MistakeList> per_doc(docs.size());
  internal::ParallelFor(docs.size(), jobs, [&](size_t i) {
    const GameData &game = games.find(*docs[i]->game_id)->second;
    per_doc[i] = CheckClaims(*docs[i], ExtractClaims(*docs[i], game), game);
  });
  std::vector<Mistake> all;
  for (const MistakeList &list : per_doc) {
    all.insert(all.end(), list.entries().begin(), list.entries().end());
  }
  return MistakeList(ListRole::kReported, std::move(all));
}

}  // namespace accuscore
