#include "revsc/dfao.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "revsc/monoid.hpp"

namespace revsc {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (std::uint8_t b : v) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<int> reachable_order(const Dfao& d) {
  const int n = d.state_count();
  std::vector<int> order;  // 1-based states in discovery order
  std::vector<bool> seen(n + 1, false);
  order.push_back(d.initial_state());
  seen[d.initial_state()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& action : d.letter_actions()) {
      const int to = action(order[head]);
      if (!seen[to]) {
        seen[to] = true;
        order.push_back(to);
      }
    }
  }
  return order;
}

}  // namespace

Dfao::Dfao(std::vector<Transformation> letter_actions, int initial,
           OutputMap tau)
    : actions_(std::move(letter_actions)),
      initial_(initial),
      tau_(std::move(tau)) {
  const int n = tau_.degree();
  for (const auto& action : actions_)
    if (action.degree() != n)
      throw std::invalid_argument(
          "dfao: letter action degree differs from state count");
  if (initial_ < 1 || initial_ > n)
    throw std::invalid_argument("dfao: initial state outside 1..n");
}

const Transformation& Dfao::letter_action(int a) const {
  if (a < 1 || a > alphabet_size())
    throw std::invalid_argument("letter outside 1..sigma");
  return actions_[a - 1];
}

bool Dfao::is_trim() const {
  return static_cast<int>(reachable_order(*this).size()) == state_count();
}

int eval(const Dfao& d, std::span<const int> word) {
  int state = d.initial_state();
  for (int a : word) state = d.letter_action(a)(state);
  return d.output_map()(state);
}

int eval(const Dfao& d, std::initializer_list<int> word) {
  return eval(d, std::span<const int>(word.begin(), word.size()));
}

Transformation word_action(const Dfao& d, std::span<const int> word) {
  Transformation acc = Transformation::identity(d.state_count());
  // q . (xa) = a-action(q . x), so each letter composes on the left.
  for (int a : word) acc = compose(d.letter_action(a), acc);
  return acc;
}

Transformation word_action(const Dfao& d, std::initializer_list<int> word) {
  return word_action(d, std::span<const int>(word.begin(), word.size()));
}

Dfao trim(const Dfao& d) {
  const auto order = reachable_order(d);
  const int m = static_cast<int>(order.size());
  std::vector<int> renumber(d.state_count() + 1, 0);
  for (int i = 0; i < m; ++i) renumber[order[i]] = i + 1;

  std::vector<Transformation> actions;
  actions.reserve(d.alphabet_size());
  for (const auto& action : d.letter_actions()) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = renumber[action(order[i])];
    actions.emplace_back(images);
  }
  std::vector<int> outputs(m);
  for (int i = 0; i < m; ++i) outputs[i] = d.output_map()(order[i]);
  return Dfao(std::move(actions), 1,
              OutputMap(outputs, d.output_alphabet_size()));
}

Dfao minimize(const Dfao& d) {
  const Dfao t = trim(d);
  const int n = t.state_count();
  const int sigma = t.alphabet_size();

  // Moore refinement: split blocks by (block, successor blocks) signature
  // until stable. block[q] is the 0-based block of the 1-based state q.
  std::vector<int> block(n + 1, 0);
  {
    std::unordered_map<int, int> by_output;
    for (int q = 1; q <= n; ++q) {
      auto [it, added] = by_output.try_emplace(t.output_map()(q),
                                               static_cast<int>(by_output.size()));
      block[q] = it->second;
    }
  }
  while (true) {
    std::unordered_map<std::vector<std::uint8_t>, int, VecHash> by_signature;
    std::vector<int> next(n + 1, 0);
    for (int q = 1; q <= n; ++q) {
      std::vector<std::uint8_t> sig;
      sig.reserve(2 * (sigma + 1));
      const auto push16 = [&sig](int v) {
        sig.push_back(static_cast<std::uint8_t>(v & 0xFF));
        sig.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
      };
      push16(block[q]);
      for (int a = 1; a <= sigma; ++a) push16(block[t.letter_action(a)(q)]);
      auto [it, added] = by_signature.try_emplace(
          std::move(sig), static_cast<int>(by_signature.size()));
      next[q] = it->second;
    }
    const bool stable =
        static_cast<int>(by_signature.size()) ==
        1 + *std::max_element(block.begin() + 1, block.end());
    block = std::move(next);
    if (stable) break;
  }

  // Quotient machine; blocks are renumbered by first occurrence so the
  // result is deterministic.
  std::vector<int> renumber(n + 1, 0);  // block -> 1-based new state
  std::vector<int> representative;
  for (int q = 1; q <= n; ++q) {
    if (renumber[block[q]] == 0) {
      representative.push_back(q);
      renumber[block[q]] = static_cast<int>(representative.size());
    }
  }
  const int m = static_cast<int>(representative.size());
  std::vector<Transformation> actions;
  actions.reserve(sigma);
  for (int a = 1; a <= sigma; ++a) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i)
      images[i] = renumber[block[t.letter_action(a)(representative[i])]];
    actions.emplace_back(images);
  }
  std::vector<int> outputs(m);
  for (int i = 0; i < m; ++i) outputs[i] = t.output_map()(representative[i]);
  return trim(Dfao(std::move(actions), renumber[block[t.initial_state()]],
                   OutputMap(outputs, t.output_alphabet_size())));
}

ReversedDfao reverse(const Dfao& d) {
  if (!d.is_trim())
    throw std::invalid_argument(
        "reverse: machine is not trim; apply trim first");
  const int n = d.state_count();
  const int sigma = d.alphabet_size();
  const int k = d.output_alphabet_size();

  // Breadth-first search from tau over g -> g . letter action. States are
  // stored as raw 0-based value arrays.
  std::vector<std::vector<std::uint8_t>> states;
  std::unordered_map<std::vector<std::uint8_t>, int, VecHash> index;
  {
    auto raw = d.output_map().raw();
    states.emplace_back(raw.begin(), raw.end());
    index.emplace(states.front(), 0);
  }
  std::vector<std::vector<int>> successors(sigma);
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (int a = 0; a < sigma; ++a) {
      const auto araw = d.letter_actions()[a].raw();
      std::vector<std::uint8_t> next(n);
      for (int q = 0; q < n; ++q) next[q] = states[head][araw[q]];
      auto [it, added] =
          index.try_emplace(std::move(next), static_cast<int>(states.size()));
      if (added) states.push_back(it->first);
      successors[a].push_back(it->second);
    }
  }

  const std::size_t count = states.size();
  if (count > 65535)
    throw std::runtime_error(
        "reverse: reversal has more than 65535 states; compute the size "
        "with tau_orbit instead");

  std::vector<Transformation> actions;
  actions.reserve(sigma);
  for (int a = 0; a < sigma; ++a) {
    std::vector<int> images(count);
    for (std::size_t s = 0; s < count; ++s) images[s] = successors[a][s] + 1;
    actions.emplace_back(images);
  }
  std::vector<int> outputs(count);
  for (std::size_t s = 0; s < count; ++s)
    outputs[s] = states[s][d.initial_state() - 1] + 1;

  std::vector<OutputMap> maps;
  maps.reserve(count);
  for (const auto& raw : states)
    maps.push_back(OutputMap::from_raw(raw, k));
  return ReversedDfao(std::move(maps),
                      Dfao(std::move(actions), 1, OutputMap(outputs, k)));
}

std::uint64_t reversal_state_complexity(const Dfao& d) {
  if (!d.is_trim())
    throw std::invalid_argument(
        "reversal_state_complexity: machine is not trim; apply trim first");
  const std::uint64_t via_reverse = reverse(d).machine().state_count();

  if (d.state_count() <= 16 && d.output_alphabet_size() <= 16) {
    const std::uint64_t via_orbit =
        tau_orbit(d.letter_actions(), d.output_map()).size();
    if (via_orbit != via_reverse)
      throw std::logic_error(
          "reversal_state_complexity: orbit and reversal counts disagree");
  }
  if (d.state_count() <= 7 && d.alphabet_size() >= 1) {
    // Small enough to materialize the whole transition monoid (at most
    // n^n elements) and compose tau against it.
    const MonoidClosure m = close(d.letter_actions());
    std::vector<std::vector<std::uint8_t>> composed;
    composed.reserve(m.size());
    m.for_each([&](const Transformation& s) {
      const OutputMap f = compose(d.output_map(), s);
      auto raw = f.raw();
      composed.emplace_back(raw.begin(), raw.end());
    });
    std::sort(composed.begin(), composed.end());
    composed.erase(std::unique(composed.begin(), composed.end()),
                   composed.end());
    if (composed.size() != via_reverse)
      throw std::logic_error(
          "reversal_state_complexity: closure and reversal counts disagree");
  }
  return via_reverse;
}

namespace {

struct Line {
  int number = 0;
  std::string text;
};

// Content lines with comments stripped, in order.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string line(text.substr(pos, eol - pos));
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line.erase(0, start);
    if (!line.empty()) lines.push_back({number, std::move(line)});
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

// Reads "<key>=<positive int>" from the given token.
int parse_assignment(const Line& line, std::string_view token,
                     std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (!token.starts_with(prefix))
    throw ParseError(line.number, "expected '" + prefix + "<value>', got '" +
                                      std::string(token) + "'");
  const std::string value(token.substr(prefix.size()));
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number,
                     "invalid value for " + std::string(key) + ": '" + value +
                         "'");
  }
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> tokens;
  std::string t;
  while (is >> t) tokens.push_back(t);
  return tokens;
}

std::string without_spaces(std::string s) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  return s;
}

std::vector<int> parse_bracket_list(const Line& line, std::string_view body) {
  std::vector<int> values;
  try {
    const Transformation t = parse_list(body);
    for (int q = 1; q <= t.degree(); ++q) values.push_back(t(q));
  } catch (const std::invalid_argument&) {
    // parse_list enforces entries <= degree; re-parse leniently since tau
    // values range over 1..k, not 1..n.
    values.clear();
    std::string cleaned(body);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::erase(cleaned, '[');
    std::erase(cleaned, ']');
    std::istringstream is(cleaned);
    int v = 0;
    while (is >> v) values.push_back(v);
    if (values.empty())
      throw ParseError(line.number, "expected a list like [1,2,3]");
  }
  return values;
}

}  // namespace

Dfao parse_dfao(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty machine description");

  const auto header = split_tokens(lines[0].text);
  if (header.size() != 5 || header[0] != "dfao")
    throw ParseError(lines[0].number,
                     "expected header 'dfao n=<n> sigma=<s> k=<k> q0=<q>'");
  const int n = parse_assignment(lines[0], header[1], "n");
  const int sigma = parse_assignment(lines[0], header[2], "sigma");
  const int k = parse_assignment(lines[0], header[3], "k");
  const int q0 = parse_assignment(lines[0], header[4], "q0");
  if (n < 1) throw ParseError(lines[0].number, "n must be >= 1");
  if (k < 1) throw ParseError(lines[0].number, "k must be >= 1");

  if (static_cast<int>(lines.size()) != 1 + sigma + 1)
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(sigma) +
                         " letter lines and one tau line after the header");

  std::vector<Transformation> actions;
  actions.reserve(sigma);
  for (int a = 1; a <= sigma; ++a) {
    const Line& line = lines[a];
    const std::string expected = "a" + std::to_string(a) + ":";
    const auto colon = line.text.find(':');
    if (colon == std::string::npos ||
        without_spaces(line.text.substr(0, colon + 1)) != expected)
      throw ParseError(line.number, "expected '" + expected + " [...]'");
    const auto values = parse_bracket_list(line, line.text.substr(colon + 1));
    if (static_cast<int>(values.size()) != n)
      throw ParseError(line.number,
                       "expected " + std::to_string(n) + " entries");
    for (int v : values)
      if (v < 1 || v > n)
        throw ParseError(line.number, "state " + std::to_string(v) +
                                          " outside 1.." + std::to_string(n));
    actions.emplace_back(values);
  }

  const Line& tau_line = lines[1 + sigma];
  const auto colon = tau_line.text.find(':');
  if (colon == std::string::npos ||
      without_spaces(tau_line.text.substr(0, colon + 1)) != "tau:")
    throw ParseError(tau_line.number, "expected 'tau: [...]'");
  const auto values =
      parse_bracket_list(tau_line, tau_line.text.substr(colon + 1));
  if (static_cast<int>(values.size()) != n)
    throw ParseError(tau_line.number,
                     "expected " + std::to_string(n) + " entries");
  for (int v : values)
    if (v < 1 || v > k)
      throw ParseError(tau_line.number, "output " + std::to_string(v) +
                                            " outside 1.." + std::to_string(k));
  if (q0 < 1 || q0 > n)
    throw ParseError(lines[0].number, "q0 outside 1..n");
  return Dfao(std::move(actions), q0, OutputMap(values, k));
}

std::string format_dfao(const Dfao& d) {
  std::ostringstream os;
  os << "dfao n=" << d.state_count() << " sigma=" << d.alphabet_size()
     << " k=" << d.output_alphabet_size() << " q0=" << d.initial_state()
     << "\n";
  for (int a = 1; a <= d.alphabet_size(); ++a)
    os << 'a' << a << ": " << d.letter_action(a).to_list() << "\n";
  os << "tau: " << d.output_map().to_list() << "\n";
  return os.str();
}

}  // namespace revsc
