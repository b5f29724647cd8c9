#pragma once

#include "pascal/bigcount.hpp"
#include "pascal/cayley.hpp"
#include "pascal/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Transfer-matrix evaluation of p for groups whose geodesics form a regular
// language with bounded word differences: an empirical geodesic acceptor
// built from cone types, a pair machine recognising equal-valued geodesic
// pairs, and the count matrices read off that machine.

namespace pascal {

using State = std::uint32_t;

/// Deterministic acceptor over generator indices. Every state accepts and
/// the start state is 0.
class GeodesicAcceptor {
 public:
  GeodesicAcceptor() = default;
  GeodesicAcceptor(std::vector<std::string> alphabet, std::size_t states);

  std::size_t size() const { return witnesses_.size(); }
  std::size_t letters() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  std::optional<State> next(State s, GenIndex a) const;
  void set_next(State s, GenIndex a, State t);

  /// The state reached on w, or nullopt if w is rejected.
  std::optional<State> run(const Word& w) const;
  bool accepts(const Word& w) const { return run(w).has_value(); }

  /// A geodesic word leading from the identity to an element of this type.
  const Word& witness(State s) const { return witnesses_.at(s); }
  void set_witness(State s, Word w) { witnesses_.at(s) = std::move(w); }

  std::size_t cone_radius = 0;
  std::size_t train_radius = 0;

  bool operator==(const GeodesicAcceptor&) const = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::int32_t> table_;  // state * letters + a, -1 for no edge
  std::vector<Word> witnesses_;
};

/// States are the distinct cone_radius-cone types of elements of length at
/// most train_radius + 1; transitions are read off elements of length at most
/// train_radius. The ball must have radius >= train_radius + 1 + cone_radius.
/// Throws InconsistentConeRadius when two elements of one type disagree on a
/// transition, and InsufficientRadius when a type first appears at length
/// train_radius + 1.
GeodesicAcceptor build_acceptor(const Ball& ball, std::size_t train_radius, std::size_t cone_radius);

/// Moore partition refinement; keeps the lowest-numbered witness per class.
GeodesicAcceptor minimize(const GeodesicAcceptor& acceptor);

struct AcceptorCheck {
  bool ok = true;
  Word counterexample;
  bool accepted = false;  // whether the counterexample was accepted
};

/// Accepted words of length <= ball radius are exactly the geodesics.
AcceptorCheck validate_acceptor(const GeodesicAcceptor& acceptor, const Ball& ball);

struct AcceptorSchedule {
  std::size_t train_radius = 4;
  /// A cone type first seen at length train_radius + 1 moves on to the next
  /// training radius, up to this one (never below train_radius).
  std::size_t max_train_radius = 0;
  std::optional<std::size_t> cone_radius;  // unset: try 2, 3, ... up to max_cone_radius
  std::size_t max_cone_radius = 6;
  BallOptions ball;
};

/// Builds, validates and minimizes an acceptor following the schedule. The
/// last failure is rethrown when the schedule runs out.
GeodesicAcceptor build_acceptor(const GenSet& gens, const AcceptorSchedule& schedule);

/// Pair machine on equal-length pairs of accepted words. State 0 is the
/// start (q0, q0, 1); a state accepts iff its difference is the identity.
struct PairMachine {
  struct Edge {
    GenIndex a;
    GenIndex b;
    State to;
  };
  struct Node {
    State q1;
    State q2;
    GroupValue difference;
    std::vector<Edge> edges;  // sorted by (a, b)
  };

  std::vector<Node> states;
  std::size_t difference_bound = 0;
  std::size_t letters = 0;

  std::size_t size() const { return states.size(); }
  bool accepting(State s) const { return is_identity(states.at(s).difference); }
  bool accepts(const Word& w1, const Word& w2) const;
};

/// Explores the product of the acceptor with itself, tracking the difference
/// d -> a^-1 d b while l(d) <= bound + 2, and keeps the states that can still
/// reach an accepting state. Throws DifferenceOverflow, naming a pair prefix,
/// if such a state has l(d) > bound.
PairMachine build_pair_machine(const GenSet& gens, const GeodesicAcceptor& acceptor, std::size_t bound,
                               BallOptions options = {});

/// Difference bounds tried by build_transfer: 2, 4, 8, ... up to the cap.
struct DifferenceSchedule {
  std::optional<std::size_t> bound;
  std::size_t first = 2;
  std::size_t cap = 64;
};

/// Sparse square matrix of nonnegative counts.
class CountMatrix {
 public:
  using Entry = std::pair<State, BigCount>;

  CountMatrix() = default;
  explicit CountMatrix(std::size_t n) : rows_(n) {}

  std::size_t size() const { return rows_.size(); }
  /// Entries of a row sorted by column.
  const std::vector<Entry>& row(State s) const { return rows_.at(s); }
  BigCount at(State s, State t) const;
  void add(State s, State t, const BigCount& x);
  void set(State s, State t, const BigCount& x);
  std::size_t nonzeros() const;

  bool operator==(const CountMatrix&) const = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

struct CountMatrices {
  std::size_t size = 0;
  std::vector<CountMatrix> m;  // one per generator
  std::vector<BigCount> u;     // row vector, 1 at the start state
  std::vector<BigCount> v;     // column vector, 1 at accepting states

  bool operator==(const CountMatrices&) const = default;
};

/// M_a[s][t] counts the letters b with an edge s --(a, b)--> t.
CountMatrices extract_matrices(const PairMachine& pm);

/// Everything the evaluator needs: the acceptor guards the input word.
struct TransferBundle {
  GeodesicAcceptor acceptor;
  std::size_t difference_bound = 0;
  CountMatrices matrices;

  bool operator==(const TransferBundle&) const = default;
};

TransferBundle build_transfer(const GenSet& gens, const AcceptorSchedule& acceptor_schedule,
                              const DifferenceSchedule& difference_schedule = {});

/// u * M_{w1} * ... * M_{wn} * v. Throws NonGeodesicInput if the acceptor
/// rejects w.
BigCount pascal_via_matrices(const TransferBundle& bundle, const Word& w);

/// Row vector u * M_{w1} * ... * M_{wn} as sparse (state, count) pairs.
std::vector<CountMatrix::Entry> row_product(const CountMatrices& cm, const Word& w);

struct MatrixCheck {
  bool ok = true;
  std::size_t compared = 0;
  std::size_t second_geodesics = 0;  // elements also checked on a second geodesic
  std::optional<Ball::Index> mismatch;
  Word word;
  BigCount expected;
  BigCount got;
};

/// Every ball element is evaluated along its first-predecessor geodesic and,
/// when p > 1, also along its last-predecessor geodesic.
MatrixCheck validate_matrices(const TransferBundle& bundle, const Ball& ball);

struct LanguageGrowth {
  enum class Kind { Finite, Polynomial, Exponential };
  Kind kind = Kind::Finite;
  std::size_t degree = 0;  // polynomial degree of the per-length count
  std::vector<BigCount> counts;

  /// "finite", "linear-bounded" (degree 0 or 1), "polynomial degree d" or "exponential".
  std::string label() const;
};

/// Classification from the strongly connected components of the acceptor,
/// with counts of accepted words of length 0..max_length.
LanguageGrowth language_growth(const GeodesicAcceptor& acceptor, std::size_t max_length = 30);

std::string serialize_acceptor(const GeodesicAcceptor& acceptor);
GeodesicAcceptor deserialize_acceptor(const std::string& text);
std::string serialize(const TransferBundle& bundle);
/// Throws ParseError on malformed or inconsistent input.
TransferBundle deserialize(const std::string& text);

}  // namespace pascal
