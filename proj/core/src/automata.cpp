#include "pascal/automata.hpp"

#include "pascal/errors.hpp"

#include <absl/container/flat_hash_map.h>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace pascal {

// ---------------------------------------------------------------- acceptor

GeodesicAcceptor::GeodesicAcceptor(std::vector<std::string> alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), table_(states * alphabet_.size(), -1), witnesses_(states) {}

std::optional<State> GeodesicAcceptor::next(State s, GenIndex a) const {
  const auto t = table_.at(static_cast<std::size_t>(s) * letters() + a);
  if (t < 0) return std::nullopt;
  return static_cast<State>(t);
}

void GeodesicAcceptor::set_next(State s, GenIndex a, State t) {
  table_.at(static_cast<std::size_t>(s) * letters() + a) = static_cast<std::int32_t>(t);
}

std::optional<State> GeodesicAcceptor::run(const Word& w) const {
  State s = 0;
  for (auto a : w) {
    if (a >= letters()) return std::nullopt;
    auto t = next(s, a);
    if (!t) return std::nullopt;
    s = *t;
  }
  return s;
}

GeodesicAcceptor build_acceptor(const Ball& ball, std::size_t train_radius, std::size_t cone_radius) {
  if (cone_radius == 0) throw StructuralError("cone radius must be at least 1");
  const std::size_t need = train_radius + 1 + cone_radius;
  if (ball.radius() < need)
    throw InsufficientRadius("acceptor training needs a radius-" + std::to_string(need) + " ball, got radius " +
                             std::to_string(ball.radius()));
  const ForwardEdges fwd(ball);
  const std::size_t k = ball.gens().size();

  // type_k(g) = intern([(a, type_{k-1}(g a)) for forward letters a]); level k
  // is needed on elements of length <= need - k.
  std::vector<std::uint32_t> type(ball.layer_end(need), 0);
  for (std::size_t level = 1; level <= cone_radius; ++level) {
    const Ball::Index n = ball.layer_end(need - level);
    absl::flat_hash_map<std::vector<std::uint32_t>, std::uint32_t> intern;
    std::vector<std::uint32_t> next(n);
    std::vector<std::uint32_t> sig;
    for (Ball::Index g = 0; g < n; ++g) {
      sig.clear();
      for (GenIndex a = 0; a < k; ++a)
        if (auto h = fwd.next(g, a)) {
          sig.push_back(a);
          sig.push_back(type[*h]);
        }
      next[g] = intern.try_emplace(sig, static_cast<std::uint32_t>(intern.size())).first->second;
    }
    type = std::move(next);
  }

  // Number states by first appearance in ball order, so the identity is 0.
  const Ball::Index typed = ball.layer_end(train_radius + 1);
  const Ball::Index trained = ball.layer_end(train_radius);
  absl::flat_hash_map<std::uint32_t, State> state_of;
  std::vector<Ball::Index> representative;
  for (Ball::Index g = 0; g < typed; ++g)
    if (state_of.try_emplace(type[g], static_cast<State>(representative.size())).second) representative.push_back(g);
  for (State s = 0; s < representative.size(); ++s)
    if (representative[s] >= trained)
      throw InsufficientRadius("cone type of " + to_string(ball.spec(), ball.value(representative[s])) +
                               " first appears at length " + std::to_string(train_radius + 1) +
                               "; raise the training radius");

  std::vector<std::string> names;
  for (GenIndex a = 0; a < k; ++a) names.push_back(ball.gens().name(a));
  GeodesicAcceptor acc(std::move(names), representative.size());
  acc.cone_radius = cone_radius;
  acc.train_radius = train_radius;
  std::vector<Ball::Index> first_source(representative.size() * k, 0);
  for (Ball::Index g = 0; g < trained; ++g) {
    const State s = state_of.at(type[g]);
    for (GenIndex a = 0; a < k; ++a) {
      auto h = fwd.next(g, a);
      if (!h) continue;
      const State t = state_of.at(type[*h]);
      if (auto prev = acc.next(s, a)) {
        if (*prev != t)
          throw InconsistentConeRadius(
              "cone radius " + std::to_string(cone_radius) + " is too small: elements " +
              to_string(ball.spec(), ball.value(first_source[s * k + a])) + " and " + to_string(ball.spec(), ball.value(g)) +
              " share a cone type but disagree after letter " + ball.gens().name(a));
      } else {
        acc.set_next(s, a, t);
        first_source[s * k + a] = g;
      }
    }
  }
  for (State s = 0; s < representative.size(); ++s) acc.set_witness(s, some_geodesic(ball, representative[s]));
  return acc;
}

GeodesicAcceptor minimize(const GeodesicAcceptor& acceptor) {
  const std::size_t n = acceptor.size();
  const std::size_t k = acceptor.letters();
  std::vector<std::uint32_t> cls(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::vector<std::int64_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::int64_t> sig{cls[s]};
      for (GenIndex a = 0; a < k; ++a) {
        auto t = acceptor.next(s, a);
        sig.push_back(t ? static_cast<std::int64_t>(cls[*t]) : -1);
      }
      next[s] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  // Renumber classes by their lowest member; class of state 0 becomes 0.
  std::vector<std::int64_t> renum(classes, -1);
  std::vector<State> lowest;
  for (State s = 0; s < n; ++s)
    if (renum[cls[s]] < 0) {
      renum[cls[s]] = static_cast<std::int64_t>(lowest.size());
      lowest.push_back(s);
    }
  GeodesicAcceptor out(acceptor.alphabet(), lowest.size());
  out.cone_radius = acceptor.cone_radius;
  out.train_radius = acceptor.train_radius;
  for (State c = 0; c < lowest.size(); ++c) {
    out.set_witness(c, acceptor.witness(lowest[c]));
    for (GenIndex a = 0; a < k; ++a)
      if (auto t = acceptor.next(lowest[c], a)) out.set_next(c, a, static_cast<State>(renum[cls[*t]]));
  }
  return out;
}

AcceptorCheck validate_acceptor(const GeodesicAcceptor& acceptor, const Ball& ball) {
  if (acceptor.letters() != ball.gens().size())
    throw StructuralError("acceptor alphabet does not match the generating set");
  const ForwardEdges fwd(ball);
  struct Node {
    Ball::Index g;
    State q;
    std::uint32_t parent;
    GenIndex letter;
  };
  std::vector<Node> nodes{{0, 0, 0, 0}};
  auto word_to = [&](std::uint32_t i) {
    Word w;
    while (i != 0) {
      w.push_back(nodes[i].letter);
      i = nodes[i].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  std::size_t begin = 0, end = 1;
  for (std::size_t r = 0; r < ball.radius(); ++r) {
    std::vector<Node> layer;
    for (std::size_t i = begin; i < end; ++i) {
      const Node n = nodes[i];
      for (GenIndex a = 0; a < acceptor.letters(); ++a) {
        const auto h = fwd.next(n.g, a);
        const auto t = acceptor.next(n.q, a);
        if (h && t) {
          layer.push_back({*h, *t, static_cast<std::uint32_t>(i), a});
        } else if (h || t) {
          AcceptorCheck bad{false, word_to(static_cast<std::uint32_t>(i)), t.has_value()};
          bad.counterexample.push_back(a);
          return bad;
        }
      }
    }
    std::stable_sort(layer.begin(), layer.end(),
                     [](const Node& x, const Node& y) { return std::pair(x.g, x.q) < std::pair(y.g, y.q); });
    layer.erase(std::unique(layer.begin(), layer.end(),
                            [](const Node& x, const Node& y) { return x.g == y.g && x.q == y.q; }),
                layer.end());
    begin = nodes.size();
    nodes.insert(nodes.end(), layer.begin(), layer.end());
    end = nodes.size();
  }
  return {};
}

GeodesicAcceptor build_acceptor(const GenSet& gens, const AcceptorSchedule& schedule) {
  std::vector<std::size_t> radii;
  if (schedule.cone_radius)
    radii.push_back(*schedule.cone_radius);
  else
    for (std::size_t r = 2; r <= schedule.max_cone_radius; ++r) radii.push_back(r);
  const std::size_t last_train = std::max(schedule.train_radius, schedule.max_train_radius);
  for (std::size_t train = schedule.train_radius;; ++train) {
    std::string last;
    for (auto r : radii) {
      const Ball ball = Ball::build(gens, train + 1 + r, schedule.ball);
      try {
        GeodesicAcceptor acc = build_acceptor(ball, train, r);
        const auto check = validate_acceptor(acc, ball);
        if (check.ok) return minimize(acc);
        last = "cone radius " + std::to_string(r) + " gives an acceptor that " +
               (check.accepted ? "accepts the non-geodesic " : "rejects the geodesic ") +
               format_word(gens, check.counterexample);
      } catch (const InconsistentConeRadius& e) {
        last = e.what();
      } catch (const InsufficientRadius&) {
        // A larger cone radius cannot help; move to the next training radius.
        if (train == last_train) throw;
        last.clear();
        break;
      }
    }
    if (!last.empty()) throw InconsistentConeRadius(last + "; raise --cone-radius or --train-radius");
  }
}

// ------------------------------------------------------------ pair machine

bool PairMachine::accepts(const Word& w1, const Word& w2) const {
  if (w1.size() != w2.size()) return false;
  State s = 0;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const auto& edges = states[s].edges;
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.a == w1[i] && e.b == w2[i]; });
    if (it == edges.end()) return false;
    s = it->to;
  }
  return accepting(s);
}

PairMachine build_pair_machine(const GenSet& gens, const GeodesicAcceptor& acceptor, std::size_t bound,
                               BallOptions options) {
  const std::size_t k = gens.size();
  if (acceptor.letters() != k) throw StructuralError("acceptor alphabet does not match the generating set");
  if (acceptor.size() > 0xffff) throw ResourceError("acceptor has too many states for the pair machine");
  const GroupSpec& spec = gens.spec();
  const Ball diffs = Ball::build(gens, bound + 2, options);

  // diff_step[d * k * k + a * k + b] = index of a^-1 d b, or -1 outside the difference ball.
  std::vector<std::int32_t> diff_step(diffs.size() * k * k, -1);
  for (Ball::Index d = 0; d < diffs.size(); ++d) {
    const GroupValue dv = diffs.value(d);
    for (GenIndex a = 0; a < k; ++a) {
      const GroupValue left = multiply(spec, gens.value(gens.inverse(a)), dv);
      for (GenIndex b = 0; b < k; ++b)
        if (auto t = diffs.find(multiply(spec, left, gens.value(b))))
          diff_step[(static_cast<std::size_t>(d) * k + a) * k + b] = static_cast<std::int32_t>(*t);
    }
  }

  struct Explored {
    State q1, q2;
    Ball::Index d;
    std::uint32_t parent;
    GenIndex a, b;
  };
  std::vector<Explored> all{{0, 0, 0, 0, 0, 0}};
  std::vector<std::vector<PairMachine::Edge>> edges(1);
  absl::flat_hash_map<std::uint64_t, State> seen;
  auto pack = [](State q1, State q2, Ball::Index d) {
    return (static_cast<std::uint64_t>(q1) << 48) | (static_cast<std::uint64_t>(q2) << 32) | d;
  };
  seen.emplace(pack(0, 0, 0), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Explored cur = all[i];
    for (GenIndex a = 0; a < k; ++a) {
      const auto t1 = acceptor.next(cur.q1, a);
      if (!t1) continue;
      for (GenIndex b = 0; b < k; ++b) {
        const auto t2 = acceptor.next(cur.q2, b);
        if (!t2) continue;
        const auto nd = diff_step[(static_cast<std::size_t>(cur.d) * k + a) * k + b];
        if (nd < 0) continue;
        const auto key = pack(*t1, *t2, static_cast<Ball::Index>(nd));
        auto [it, fresh] = seen.try_emplace(key, static_cast<State>(all.size()));
        if (fresh) {
          all.push_back({*t1, *t2, static_cast<Ball::Index>(nd), static_cast<std::uint32_t>(i), a, b});
          edges.emplace_back();
        }
        edges[i].push_back({a, b, it->second});
      }
    }
  }

  // Co-accessibility: states from which an identity difference is reachable.
  std::vector<std::vector<State>> reverse(all.size());
  for (State s = 0; s < all.size(); ++s)
    for (const auto& e : edges[s]) reverse[e.to].push_back(s);
  std::vector<bool> live(all.size(), false);
  std::vector<State> stack;
  for (State s = 0; s < all.size(); ++s)
    if (all[s].d == 0) {
      live[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (auto p : reverse[s])
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
  }

  for (State s = 0; s < all.size(); ++s) {
    if (!live[s] || diffs.length(all[s].d) <= bound) continue;
    Word w1, w2;
    for (State at = s; at != 0; at = all[at].parent) {
      w1.push_back(all[at].a);
      w2.push_back(all[at].b);
    }
    std::reverse(w1.begin(), w1.end());
    std::reverse(w2.begin(), w2.end());
    throw DifferenceOverflow("word difference " + to_string(spec, diffs.value(all[s].d)) + " of length " +
                             std::to_string(diffs.length(all[s].d)) + " exceeds bound " + std::to_string(bound) +
                             " after the pair prefix (" + format_word(gens, w1) + ", " + format_word(gens, w2) +
                             "); raise --diff-bound, or the geodesic pairs have unbounded differences");
  }

  // Renumber the live part breadth-first from the start.
  PairMachine pm;
  pm.difference_bound = bound;
  pm.letters = k;
  std::vector<std::int64_t> renum(all.size(), -1);
  std::vector<State> order{0};
  renum[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& e : edges[order[i]])
      if (live[e.to] && renum[e.to] < 0) {
        renum[e.to] = static_cast<std::int64_t>(order.size());
        order.push_back(e.to);
      }
  for (auto s : order) {
    PairMachine::Node node{all[s].q1, all[s].q2, diffs.value(all[s].d), {}};
    for (const auto& e : edges[s])
      if (live[e.to]) node.edges.push_back({e.a, e.b, static_cast<State>(renum[e.to])});
    pm.states.push_back(std::move(node));
  }
  return pm;
}

// ------------------------------------------------------------ count matrices

BigCount CountMatrix::at(State s, State t) const {
  const auto& r = rows_.at(s);
  auto it = std::lower_bound(r.begin(), r.end(), t, [](const Entry& e, State c) { return e.first < c; });
  return it != r.end() && it->first == t ? it->second : BigCount(0);
}

void CountMatrix::add(State s, State t, const BigCount& x) {
  auto& r = rows_.at(s);
  auto it = std::lower_bound(r.begin(), r.end(), t, [](const Entry& e, State c) { return e.first < c; });
  if (it != r.end() && it->first == t)
    it->second += x;
  else if (x != 0)
    r.insert(it, {t, x});
}

void CountMatrix::set(State s, State t, const BigCount& x) {
  auto& r = rows_.at(s);
  auto it = std::lower_bound(r.begin(), r.end(), t, [](const Entry& e, State c) { return e.first < c; });
  if (it != r.end() && it->first == t) {
    if (x == 0)
      r.erase(it);
    else
      it->second = x;
  } else if (x != 0) {
    r.insert(it, {t, x});
  }
}

std::size_t CountMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

CountMatrices extract_matrices(const PairMachine& pm) {
  CountMatrices cm;
  cm.size = pm.size();
  cm.m.assign(pm.letters, CountMatrix(cm.size));
  cm.u.assign(cm.size, 0);
  cm.v.assign(cm.size, 0);
  if (cm.size) cm.u[0] = 1;
  for (State s = 0; s < cm.size; ++s) {
    if (pm.accepting(s)) cm.v[s] = 1;
    for (const auto& e : pm.states[s].edges) cm.m[e.a].add(s, e.to, 1);
  }
  return cm;
}

TransferBundle build_transfer(const GenSet& gens, const AcceptorSchedule& acceptor_schedule,
                              const DifferenceSchedule& difference_schedule) {
  TransferBundle bundle;
  bundle.acceptor = build_acceptor(gens, acceptor_schedule);
  std::vector<std::size_t> bounds;
  if (difference_schedule.bound)
    bounds.push_back(*difference_schedule.bound);
  else
    for (std::size_t d = std::max<std::size_t>(difference_schedule.first, 1); d <= difference_schedule.cap; d *= 2)
      bounds.push_back(d);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    try {
      const PairMachine pm = build_pair_machine(gens, bundle.acceptor, bounds[i], acceptor_schedule.ball);
      bundle.difference_bound = bounds[i];
      bundle.matrices = extract_matrices(pm);
      return bundle;
    } catch (const DifferenceOverflow&) {
      if (i + 1 == bounds.size()) throw;
    }
  }
  throw DifferenceOverflow("empty difference-bound schedule");
}

namespace {

// Dense accumulator reused across steps of a row-vector product.
class RowStepper {
 public:
  explicit RowStepper(std::size_t n) : acc_(n), used_(n, false) {}

  std::vector<CountMatrix::Entry> step(const std::vector<CountMatrix::Entry>& row, const CountMatrix& m) {
    for (const auto& [s, x] : row)
      for (const auto& [t, y] : m.row(s)) {
        if (!used_[t]) {
          used_[t] = true;
          touched_.push_back(t);
          acc_[t] = 0;
        }
        acc_[t] += x * y;
      }
    std::sort(touched_.begin(), touched_.end());
    std::vector<CountMatrix::Entry> out;
    out.reserve(touched_.size());
    for (auto t : touched_) {
      out.emplace_back(t, std::move(acc_[t]));
      used_[t] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<BigCount> acc_;
  std::vector<bool> used_;
  std::vector<State> touched_;
};

BigCount finish(const std::vector<CountMatrix::Entry>& row, const std::vector<BigCount>& v) {
  BigCount total = 0;
  for (const auto& [s, x] : row) total += x * v[s];
  return total;
}

}  // namespace

std::vector<CountMatrix::Entry> row_product(const CountMatrices& cm, const Word& w) {
  std::vector<CountMatrix::Entry> row;
  for (State s = 0; s < cm.size; ++s)
    if (cm.u[s] != 0) row.emplace_back(s, cm.u[s]);
  RowStepper stepper(cm.size);
  for (auto a : w) row = stepper.step(row, cm.m.at(a));
  return row;
}

BigCount pascal_via_matrices(const TransferBundle& bundle, const Word& w) {
  if (!bundle.acceptor.accepts(w)) throw NonGeodesicInput("word is not accepted as a geodesic");
  return finish(row_product(bundle.matrices, w), bundle.matrices.v);
}

MatrixCheck validate_matrices(const TransferBundle& bundle, const Ball& ball) {
  const CountMatrices& cm = bundle.matrices;
  if (cm.m.size() != ball.gens().size()) throw StructuralError("matrix alphabet does not match the generating set");
  MatrixCheck out;
  RowStepper stepper(cm.size);
  using Row = std::vector<CountMatrix::Entry>;
  std::vector<Row> first_prev, last_prev;
  first_prev.push_back(row_product(cm, {}));
  last_prev = first_prev;
  auto fail = [&](Ball::Index g, PredecessorChoice c, BigCount got) {
    out.ok = false;
    out.mismatch = g;
    out.word = some_geodesic(ball, g, c);
    out.expected = ball.count(g);
    out.got = std::move(got);
  };
  {
    const BigCount at_one = finish(first_prev[0], cm.v);
    ++out.compared;
    if (at_one != 1) {
      fail(0, PredecessorChoice::First, at_one);
      return out;
    }
  }
  for (std::size_t r = 1; r <= ball.radius(); ++r) {
    const Ball::Index begin = ball.layer_begin(r), end = ball.layer_end(r);
    const Ball::Index prev_begin = ball.layer_begin(r - 1);
    const bool keep = r < ball.radius();
    std::vector<Row> first_cur, last_cur;
    if (keep) {
      first_cur.resize(end - begin);
      last_cur.resize(end - begin);
    }
    for (Ball::Index g = begin; g < end; ++g) {
      const auto preds = ball.predecessors(g);
      Row first = stepper.step(first_prev[preds.front().parent - prev_begin], cm.m[preds.front().generator]);
      BigCount value = finish(first, cm.v);
      ++out.compared;
      if (value != ball.count(g)) {
        fail(g, PredecessorChoice::First, std::move(value));
        return out;
      }
      Row last = stepper.step(last_prev[preds.back().parent - prev_begin], cm.m[preds.back().generator]);
      if (ball.count(g) > 1) {
        value = finish(last, cm.v);
        ++out.second_geodesics;
        if (value != ball.count(g)) {
          fail(g, PredecessorChoice::Last, std::move(value));
          return out;
        }
      }
      if (keep) {
        first_cur[g - begin] = std::move(first);
        last_cur[g - begin] = std::move(last);
      }
    }
    first_prev = std::move(first_cur);
    last_prev = std::move(last_cur);
  }
  return out;
}

// ------------------------------------------------------------------ growth

std::string LanguageGrowth::label() const {
  switch (kind) {
    case Kind::Finite: return "finite";
    case Kind::Exponential: return "exponential";
    case Kind::Polynomial:
      return degree <= 1 ? "linear-bounded" : "polynomial degree " + std::to_string(degree);
  }
  return "?";
}

LanguageGrowth language_growth(const GeodesicAcceptor& acceptor, std::size_t max_length) {
  const std::size_t n = acceptor.size();
  const std::size_t k = acceptor.letters();
  std::vector<std::vector<State>> succ(n);
  for (State s = 0; s < n; ++s)
    for (GenIndex a = 0; a < k; ++a)
      if (auto t = acceptor.next(s, a)) succ[s].push_back(*t);

  // Tarjan; components come out in reverse topological order.
  std::vector<std::int64_t> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::int64_t counter = 0, comps = 0;
  std::function<void(State)> visit = [&](State s) {
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    for (auto t : succ[s]) {
      if (index[t] < 0) {
        visit(t);
        low[s] = std::min(low[s], low[t]);
      } else if (on_stack[t]) {
        low[s] = std::min(low[s], index[t]);
      }
    }
    if (low[s] == index[s]) {
      State t;
      do {
        t = stack.back();
        stack.pop_back();
        on_stack[t] = false;
        comp[t] = comps;
      } while (t != s);
      ++comps;
    }
  };
  for (State s = 0; s < n; ++s)
    if (index[s] < 0) visit(s);

  std::vector<std::size_t> nodes(comps, 0), inner(comps, 0);
  for (State s = 0; s < n; ++s) {
    ++nodes[comp[s]];
    for (auto t : succ[s])
      if (comp[t] == comp[s]) ++inner[comp[s]];
  }
  LanguageGrowth g;
  bool any_cycle = false;
  for (std::int64_t c = 0; c < comps; ++c) {
    if (inner[c] > nodes[c]) g.kind = LanguageGrowth::Kind::Exponential;
    if (inner[c] > 0) any_cycle = true;
  }
  if (g.kind != LanguageGrowth::Kind::Exponential && any_cycle) {
    // Longest chain of cyclic components; component ids are reverse topological.
    std::vector<std::size_t> chain(comps, 0);
    std::vector<std::vector<std::int64_t>> down(comps);
    for (State s = 0; s < n; ++s)
      for (auto t : succ[s])
        if (comp[t] != comp[s]) down[comp[s]].push_back(comp[t]);
    std::size_t best = 0;
    for (std::int64_t c = 0; c < comps; ++c) {
      std::size_t below = 0;
      for (auto d : down[c]) below = std::max(below, chain[d]);
      chain[c] = below + (inner[c] > 0 ? 1 : 0);
      best = std::max(best, chain[c]);
    }
    g.kind = LanguageGrowth::Kind::Polynomial;
    g.degree = best - 1;
  }

  std::vector<BigCount> at(n, 0);
  if (n) at[0] = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    BigCount total = 0;
    for (const auto& x : at) total += x;
    g.counts.push_back(total);
    std::vector<BigCount> next(n, 0);
    for (State s = 0; s < n; ++s)
      if (at[s] != 0)
        for (auto t : succ[s]) next[t] += at[s];
    at = std::move(next);
  }
  return g;
}

// ----------------------------------------------------------- serialization

namespace {

using nlohmann::ordered_json;

ordered_json count_json(const BigCount& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return to_decimal(x);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError("artifact " + where + ": " + what);
}

BigCount count_from(const ordered_json& j, const std::string& where) {
  if (j.is_number_unsigned()) return BigCount(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return BigCount(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      bad(where, "expected a decimal count, got \"" + s + "\"");
    return BigCount(s);
  }
  bad(where, "expected a nonnegative count");
}

std::size_t index_from(const ordered_json& j, const std::string& where, std::size_t limit) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(where, "expected a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v >= limit) bad(where, std::to_string(v) + " is out of range (limit " + std::to_string(limit) + ")");
  return static_cast<std::size_t>(v);
}

const ordered_json& field(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

const ordered_json& array_field(const ordered_json& j, const char* key, const std::string& where) {
  const auto& a = field(j, key, where);
  if (!a.is_array()) bad(where + "/" + key, "expected an array");
  return a;
}

ordered_json acceptor_json(const GeodesicAcceptor& acc) {
  ordered_json j;
  j["alphabet"] = acc.alphabet();
  j["cone_radius"] = acc.cone_radius;
  j["train_radius"] = acc.train_radius;
  j["states"] = acc.size();
  j["start"] = 0;
  ordered_json tr = ordered_json::array();
  for (State s = 0; s < acc.size(); ++s)
    for (GenIndex a = 0; a < acc.letters(); ++a)
      if (auto t = acc.next(s, a)) tr.push_back({s, a, *t});
  j["transitions"] = std::move(tr);
  ordered_json wit = ordered_json::array();
  for (State s = 0; s < acc.size(); ++s) wit.push_back(acc.witness(s));
  j["witnesses"] = std::move(wit);
  return j;
}

GeodesicAcceptor acceptor_from(const ordered_json& j, const std::string& where) {
  const auto& alpha = array_field(j, "alphabet", where);
  std::vector<std::string> names;
  for (const auto& n : alpha) {
    if (!n.is_string()) bad(where + "/alphabet", "expected generator names");
    names.push_back(n.get<std::string>());
  }
  const std::size_t states = index_from(field(j, "states", where), where + "/states", 0xffffffffu);
  if (states == 0) bad(where + "/states", "an acceptor needs a start state");
  if (index_from(field(j, "start", where), where + "/start", states) != 0) bad(where + "/start", "start state must be 0");
  GeodesicAcceptor acc(names, states);
  acc.cone_radius = index_from(field(j, "cone_radius", where), where + "/cone_radius", 1u << 20);
  acc.train_radius = index_from(field(j, "train_radius", where), where + "/train_radius", 1u << 20);
  const auto& tr = array_field(j, "transitions", where);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const std::string w = where + "/transitions/" + std::to_string(i);
    if (!tr[i].is_array() || tr[i].size() != 3) bad(w, "expected [from, letter, to]");
    const auto s = static_cast<State>(index_from(tr[i][0], w, states));
    const auto a = static_cast<GenIndex>(index_from(tr[i][1], w, names.size()));
    const auto t = static_cast<State>(index_from(tr[i][2], w, states));
    if (acc.next(s, a)) bad(w, "duplicate transition");
    acc.set_next(s, a, t);
  }
  const auto& wit = array_field(j, "witnesses", where);
  if (wit.size() != states) bad(where + "/witnesses", "expected one witness per state");
  for (std::size_t s = 0; s < states; ++s) {
    const std::string w = where + "/witnesses/" + std::to_string(s);
    if (!wit[s].is_array()) bad(w, "expected a word");
    Word word;
    for (const auto& x : wit[s]) word.push_back(static_cast<GenIndex>(index_from(x, w, names.size())));
    acc.set_witness(static_cast<State>(s), std::move(word));
  }
  return acc;
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("artifact is not valid JSON: ") + e.what());
  }
}

void expect_format(const ordered_json& j, const char* format) {
  const auto& f = field(j, "format", "");
  if (!f.is_string() || f.get<std::string>() != format)
    bad("/format", std::string("expected \"") + format + "\"");
}

}  // namespace

std::string serialize_acceptor(const GeodesicAcceptor& acceptor) {
  ordered_json j;
  j["format"] = "pascal-acceptor/1";
  const ordered_json body = acceptor_json(acceptor);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump(1) + "\n";
}

GeodesicAcceptor deserialize_acceptor(const std::string& text) {
  const auto j = parse_json(text);
  expect_format(j, "pascal-acceptor/1");
  return acceptor_from(j, "");
}

std::string serialize(const TransferBundle& bundle) {
  const CountMatrices& cm = bundle.matrices;
  ordered_json j;
  j["format"] = "pascal-transfer/1";
  j["acceptor"] = acceptor_json(bundle.acceptor);
  j["difference_bound"] = bundle.difference_bound;
  ordered_json mj;
  mj["states"] = cm.size;
  ordered_json u = ordered_json::array(), v = ordered_json::array();
  for (const auto& x : cm.u) u.push_back(count_json(x));
  for (const auto& x : cm.v) v.push_back(count_json(x));
  mj["u"] = std::move(u);
  mj["v"] = std::move(v);
  ordered_json ms = ordered_json::array();
  for (GenIndex a = 0; a < cm.m.size(); ++a) {
    ordered_json rows = ordered_json::array();
    for (State s = 0; s < cm.size; ++s) {
      ordered_json row = ordered_json::array();
      std::size_t next = 0;
      for (const auto& [t, x] : cm.m[a].row(s)) {
        for (; next < t; ++next) row.push_back(0);
        row.push_back(count_json(x));
        ++next;
      }
      for (; next < cm.size; ++next) row.push_back(0);
      rows.push_back(std::move(row));
    }
    ordered_json entry;
    entry["letter"] = bundle.acceptor.alphabet().at(a);
    entry["rows"] = std::move(rows);
    ms.push_back(std::move(entry));
  }
  mj["M"] = std::move(ms);
  j["matrices"] = std::move(mj);
  return j.dump(-1) + "\n";
}

TransferBundle deserialize(const std::string& text) {
  const auto j = parse_json(text);
  expect_format(j, "pascal-transfer/1");
  TransferBundle b;
  b.acceptor = acceptor_from(field(j, "acceptor", ""), "/acceptor");
  b.difference_bound = index_from(field(j, "difference_bound", ""), "/difference_bound", 1u << 20);
  const auto& mj = field(j, "matrices", "");
  CountMatrices& cm = b.matrices;
  cm.size = index_from(field(mj, "states", "/matrices"), "/matrices/states", 0xffffffffu);
  for (const char* key : {"u", "v"}) {
    const auto& arr = array_field(mj, key, "/matrices");
    const std::string w = std::string("/matrices/") + key;
    if (arr.size() != cm.size) bad(w, "expected " + std::to_string(cm.size) + " entries");
    auto& dst = key[0] == 'u' ? cm.u : cm.v;
    for (std::size_t i = 0; i < arr.size(); ++i) dst.push_back(count_from(arr[i], w + "/" + std::to_string(i)));
  }
  const auto& ms = array_field(mj, "M", "/matrices");
  if (ms.size() != b.acceptor.letters()) bad("/matrices/M", "expected one matrix per alphabet letter");
  for (std::size_t a = 0; a < ms.size(); ++a) {
    const std::string w = "/matrices/M/" + std::to_string(a);
    const auto& letter = field(ms[a], "letter", w);
    if (!letter.is_string() || letter.get<std::string>() != b.acceptor.alphabet()[a])
      bad(w + "/letter", "expected \"" + b.acceptor.alphabet()[a] + "\"");
    const auto& rows = array_field(ms[a], "rows", w);
    if (rows.size() != cm.size) bad(w + "/rows", "expected " + std::to_string(cm.size) + " rows");
    CountMatrix m(cm.size);
    for (State s = 0; s < cm.size; ++s) {
      const std::string rw = w + "/rows/" + std::to_string(s);
      if (!rows[s].is_array() || rows[s].size() != cm.size) bad(rw, "expected " + std::to_string(cm.size) + " entries");
      for (State t = 0; t < cm.size; ++t) m.set(s, t, count_from(rows[s][t], rw + "/" + std::to_string(t)));
    }
    cm.m.push_back(std::move(m));
  }
  return b;
}

}  // namespace pascal
