#ifndef REVSC_DFAO_HPP
#define REVSC_DFAO_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revsc/output_map.hpp"
#include "revsc/transform.hpp"

namespace revsc {

/// A deterministic finite automaton with output: states {1..n}, input
/// letters {1..sigma} acting as transformations of the state set, an
/// initial state, and an output map into {1..k}. Computes the function
/// w -> tau(q0 . w). Immutable after construction.
class Dfao {
 public:
  Dfao(std::vector<Transformation> letter_actions, int initial, OutputMap tau);

  int state_count() const { return tau_.degree(); }
  int alphabet_size() const { return static_cast<int>(actions_.size()); }
  int output_alphabet_size() const { return tau_.alphabet_size(); }
  int initial_state() const { return initial_; }

  const std::vector<Transformation>& letter_actions() const {
    return actions_;
  }
  /// Action of the 1-based letter a.
  const Transformation& letter_action(int a) const;
  const OutputMap& output_map() const { return tau_; }

  /// True iff every state is reachable from the initial state.
  bool is_trim() const;

 private:
  std::vector<Transformation> actions_;
  int initial_;
  OutputMap tau_;
};

/// tau(q0 . w) for a word over the letters 1..sigma.
int eval(const Dfao& d, std::span<const int> word);
int eval(const Dfao& d, std::initializer_list<int> word);

/// The transformation q -> q . w. Splitting a word as yx gives
/// word_action(yx) = compose(word_action(x), word_action(y)).
Transformation word_action(const Dfao& d, std::span<const int> word);
Transformation word_action(const Dfao& d, std::initializer_list<int> word);

/// Restriction to the states reachable from the initial state, renumbered
/// in breadth-first discovery order (the initial state becomes 1).
/// Computes the same function as d.
Dfao trim(const Dfao& d);

/// The minimal machine computing the same function as d: reachable, and
/// no two distinct states p, q have tau(p . w) = tau(q . w) for all words
/// w. Implemented as trim followed by iterated partition refinement
/// seeded by output values.
Dfao minimize(const Dfao& d);

/// The reversal of a machine: its states are the reachable output maps
/// { tau . word_action(w) }, letter a sends the state g to g composed
/// with a's action, the initial state is tau itself, and state g outputs
/// g(q0). For a trim input this machine is minimal as built.
class ReversedDfao {
 public:
  /// states()[i-1] is the output map serving as state i of machine().
  const std::vector<OutputMap>& states() const { return states_; }

  /// The reversal as an ordinary Dfao; its initial state 1 is tau.
  const Dfao& machine() const { return machine_; }

 private:
  friend ReversedDfao reverse(const Dfao& d);
  ReversedDfao(std::vector<OutputMap> states, Dfao machine)
      : states_(std::move(states)), machine_(std::move(machine)) {}

  std::vector<OutputMap> states_;
  Dfao machine_;
};

/// Builds the reversal of a trim machine, materializing only the states
/// reachable from tau: eval(reverse(d).machine(), w) = eval(d, w reversed)
/// for every word. Throws std::invalid_argument if d is not trim (call
/// trim first; without trimness the result need not be minimal).
ReversedDfao reverse(const Dfao& d);

/// Number of states of the minimal machine computing w -> f(w reversed):
/// computed by (a) the reversal construction, (b) orbit breadth-first
/// search over output maps, and (c) composing tau against the materialized
/// transition monoid, methods (b) and (c) where feasible, with mandatory
/// agreement of everything computed. Requires a trim machine.
std::uint64_t reversal_state_complexity(const Dfao& d);

/// Error raised by parse_dfao, carrying the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the textual machine format:
///   dfao n=<n> sigma=<s> k=<k> q0=<state>
///   a1: [t(1),...,t(n)]
///   ...
///   a<s>: [t(1),...,t(n)]
///   tau: [o(1),...,o(n)]
/// Blank lines are skipped and '#' starts a comment; whitespace within
/// lines is free-form. Errors are reported as ParseError with a line
/// number.
Dfao parse_dfao(std::string_view text);

/// Renders a machine in the format accepted by parse_dfao.
std::string format_dfao(const Dfao& d);

}  // namespace revsc

#endif  // REVSC_DFAO_HPP
