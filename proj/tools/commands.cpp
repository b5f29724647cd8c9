#include "commands.hpp"

#include "pascal/abelian.hpp"
#include "pascal/automata.hpp"
#include "pascal/cayley.hpp"
#include "pascal/errors.hpp"
#include "pascal/formulas.hpp"
#include "pascal/spec_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#ifndef PASCAL_PRESET_DIR
#define PASCAL_PRESET_DIR "presets"
#endif

namespace pascal::cli {

namespace {

using nlohmann::ordered_json;

/// A command does not apply to its input, or its flags are inconsistent.
class UsageError : public pascal::Error {
 public:
  using pascal::Error::Error;
};

/// A fast path disagreed with the oracle.
class VerificationFailure : public pascal::Error {
 public:
  using pascal::Error::Error;
};

struct Input {
  std::string spec_file;
  std::string preset;
  std::string preset_dir;
  std::size_t max_elements = BallOptions{}.max_elements;

  BallOptions ball() const { return {max_elements}; }
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("spec", in.spec_file, "Group-spec JSON file");
  cmd->add_option("--preset", in.preset, "Built-in preset (see `pascal presets`)");
  cmd->add_option("--preset-dir", in.preset_dir, "Directory holding preset files");
  cmd->add_option("--max-elements", in.max_elements, "Ball size cap")->capture_default_str();
}

std::string preset_dir(const Input& in) {
  if (!in.preset_dir.empty()) return in.preset_dir;
  if (const char* env = std::getenv("PASCAL_PRESET_DIR")) return env;
  return PASCAL_PRESET_DIR;
}

SpecDocument load(const Input& in, std::ostream& err) {
  if (in.spec_file.empty() == in.preset.empty()) throw UsageError("give exactly one of a spec file or --preset");
  SpecDocument doc = in.preset.empty() ? load_spec_file(in.spec_file) : load_preset(in.preset, preset_dir(in));
  const auto check = check_generation(doc.gens);
  if (check.status == GenerationCheck::Status::NotGenerating)
    err << "warning: generators do not generate " << doc.spec.describe() << " (" << check.note
        << "); results describe the generated subgroup\n";
  else if (check.status == GenerationCheck::Status::Unchecked)
    err << "warning: generation of " << doc.spec.describe() << " not checked; results describe the generated subgroup\n";
  return doc;
}

ordered_json count_json(const BigCount& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return to_decimal(x);
}

ordered_json rational_vector_json(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string join_names(const GenSet& gens, const std::vector<GenIndex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + gens.name(ids[i]);
  return s;
}

std::string show_word(const GenSet& gens, const Word& w) { return w.empty() ? "(empty)" : format_word(gens, w); }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

AbelianContext abelian_context(const SpecDocument& doc, const char* command) {
  try {
    return AbelianContext(doc.gens);
  } catch (const StructuralError& e) {
    throw UsageError(std::string(command) + " needs an abelian spec: " + e.what());
  }
}

// ------------------------------------------------------------------ ball

struct BallArgs {
  Input in;
  std::size_t radius = 0;
  std::string format = "tsv";
};

void cmd_ball(const BallArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const Ball ball = Ball::build(doc.gens, a.radius, a.in.ball());
  struct Row {
    std::size_t length;
    std::string element;
    Ball::Index index;
  };
  std::vector<Row> rows;
  for (Ball::Index i = 0; i < ball.size(); ++i) rows.push_back({ball.length(i), to_string(doc.spec, ball.value(i)), i});
  std::sort(rows.begin(), rows.end(),
            [](const Row& x, const Row& y) { return std::tie(x.length, x.element) < std::tie(y.length, y.element); });
  if (a.format == "tsv") {
    out << "element\tlength\tcount\n";
    for (const auto& r : rows) out << r.element << '\t' << r.length << '\t' << ball.count(r.index) << '\n';
    return;
  }
  ordered_json j;
  j["group"] = doc.spec.describe();
  j["radius"] = a.radius;
  j["size"] = ball.size();
  ordered_json els = ordered_json::array();
  for (const auto& r : rows)
    els.push_back({{"element", r.element}, {"length", r.length}, {"count", count_json(ball.count(r.index))}});
  j["elements"] = std::move(els);
  out << j.dump(2) << '\n';
}

// -------------------------------------------------------------- triangle

struct TriangleArgs {
  Input in;
  std::size_t size = 0;
};

void cmd_triangle(const TriangleArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  if (doc.spec.kind() != GroupKind::FreeAbelian || doc.spec.rank() != 2)
    throw UsageError("triangle needs Z^2, got " + doc.spec.describe());
  const GroupValue e1 = GroupValue::vector({1, 0}), e2 = GroupValue::vector({0, 1});
  if (doc.gens.size() != 4 || !doc.gens.find(e1) || !doc.gens.find(e2))
    throw UsageError("triangle needs the standard generators of Z^2");
  if (a.size == 0) throw UsageError("--size must be positive");
  const Ball ball = Ball::build(doc.gens, 2 * (a.size - 1), a.in.ball());
  for (std::size_t i = 0; i < a.size; ++i) {
    for (std::size_t j = 0; j < a.size; ++j) {
      const auto idx = ball.find(GroupValue::vector({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}));
      out << (j ? "\t" : "") << ball.count(*idx);
    }
    out << '\n';
  }
}

// ------------------------------------------------------------------ hull

void cmd_hull(const Input& in, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(in, err);
  const AbelianContext ctx = abelian_context(doc, "hull");
  const ConvexBody body = unit_ball(ctx);
  ordered_json j;
  j["group"] = doc.spec.describe();
  j["dimension"] = ctx.dimension();
  j["torsion_order"] = ctx.torsion_order();
  ordered_json pts = ordered_json::array();
  for (GenIndex i = 0; i < doc.gens.size(); ++i)
    pts.push_back({{"generator", doc.gens.name(i)},
                   {"point", rational_vector_json(ctx.appearance_point(i))},
                   {"class", to_string(body.classify(i))}});
  j["appearance_points"] = std::move(pts);
  ordered_json verts = ordered_json::array();
  for (const auto& v : body.vertices()) verts.push_back(rational_vector_json(v));
  j["vertices"] = std::move(verts);
  ordered_json facets = ordered_json::array();
  for (const auto& f : body.facets()) {
    std::vector<GenIndex> members(f.members.begin(), f.members.end());
    ordered_json names = ordered_json::array();
    for (auto m : members) names.push_back(doc.gens.name(m));
    facets.push_back({{"functional", rational_vector_json(f.functional)}, {"generators", names}});
  }
  j["facets"] = std::move(facets);
  ordered_json sets = ordered_json::array();
  for (const auto& s : maximal_compatible_sets(ctx, body)) {
    ordered_json names = ordered_json::array();
    for (auto g : s.generators) names.push_back(doc.gens.name(g));
    sets.push_back(std::move(names));
  }
  j["maximal_compatible_sets"] = std::move(sets);
  j["generic"] = is_generic(ctx, body);
  out << j.dump(2) << '\n';
}

// ------------------------------------------------------------------- tau

struct TauArgs {
  Input in;
  std::string element;
  std::string word;
  std::size_t samples = 0;
};

GroupValue element_of(const SpecDocument& doc, const std::string& element, const std::string& word) {
  if (element.empty() == word.empty()) throw UsageError("give exactly one of --element or --word");
  if (!element.empty()) {
    GroupValue v = parse_value(doc.spec, element);
    return v;
  }
  return evaluate(doc.gens, parse_word(doc.gens, word));
}

void cmd_tau(const TauArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const AbelianContext ctx = abelian_context(doc, "tau");
  const ConvexBody body = unit_ball(ctx);
  const GroupValue g = element_of(doc, a.element, a.word);
  out << to_string(translation_length(ctx, body, g)) << '\n';
  if (a.samples) {
    const GroupValue gj = power(doc.spec, g, static_cast<std::int64_t>(a.samples));
    std::size_t radius = 1;
    // Grow the ball until g^j shows up; the cap turns runaway growth into a resource error.
    while (true) {
      const Ball ball = Ball::build(doc.gens, radius, a.in.ball());
      if (auto len = ball.length_of(gj)) {
        out << "sampled\t" << a.samples << '\t' << to_string(Rational(*len) / a.samples) << '\n';
        break;
      }
      radius *= 2;
    }
  }
}

// ------------------------------------------------------------ compatible

struct CompatibleArgs {
  Input in;
  std::size_t max_size = 3;
  std::vector<std::size_t> empirical;  // N R
};

void cmd_compatible(const CompatibleArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const AbelianContext ctx = abelian_context(doc, "compatible");
  const ConvexBody body = unit_ball(ctx);
  const bool empirical = !a.empirical.empty();
  std::optional<Ball> ball;
  if (empirical) ball = Ball::build(doc.gens, a.empirical[1], a.in.ball());
  out << "subset\tface" << (empirical ? "\tempirical\twitness\tagree" : "") << '\n';
  std::size_t rows = 0, agree = 0, inconclusive = 0;
  const std::size_t k = doc.gens.size();
  std::vector<GenIndex> subset;
  std::function<void(GenIndex, std::size_t)> each = [&](GenIndex from, std::size_t size) {
    if (subset.size() == size) {
      const bool face = is_compatible(ctx, body, subset);
      out << join_names(doc.gens, subset) << '\t' << (face ? "true" : "false");
      if (empirical) {
        const auto e = empirical_compatibility(*ball, subset, a.empirical[0]);
        const char* label = e.outcome == EmpiricalCompatibility::Outcome::Found      ? "true"
                            : e.outcome == EmpiricalCompatibility::Outcome::NotFound ? "false"
                                                                                     : "radius-too-small";
        const bool inc = e.outcome == EmpiricalCompatibility::Outcome::RadiusTooSmall;
        const bool ok = !inc && e.found() == face;
        out << '\t' << label << '\t' << (e.found() ? show_word(doc.gens, e.witness) : "-") << '\t'
            << (inc ? "inconclusive" : ok ? "yes" : "no");
        agree += ok;
        inconclusive += inc;
      }
      out << '\n';
      ++rows;
      return;
    }
    for (GenIndex g = from; g < k; ++g) {
      subset.push_back(g);
      each(g + 1, size);
      subset.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(a.max_size, k); ++size) each(0, size);
  if (empirical) {
    err << "compatible: " << rows << " subsets, " << agree << " agree, " << inconclusive << " inconclusive\n";
    if (agree + inconclusive != rows)
      throw VerificationFailure("face criterion and empirical search disagree on " +
                                std::to_string(rows - agree - inconclusive) + " subsets");
  }
}

// -------------------------------------------------------------- automata

struct AutomatonArgs {
  Input in;
  std::optional<std::size_t> train_radius;
  std::optional<std::size_t> cone_radius;
  std::size_t max_cone_radius = 6;
  std::optional<std::size_t> diff_bound;
  std::size_t diff_cap = 64;
  std::string output;
  std::string bundle;
  std::string word;
  std::size_t max_length = 30;
};

AcceptorSchedule schedule_for(const AutomatonArgs& a, const SpecDocument& doc) {
  AcceptorSchedule s;
  s.train_radius = a.train_radius.value_or(doc.hints.train_radius.value_or(4));
  // An explicit --train-radius is taken literally; otherwise allow a few steps up.
  s.max_train_radius = a.train_radius ? *a.train_radius : s.train_radius + 3;
  s.cone_radius = a.cone_radius ? a.cone_radius : doc.hints.cone_radius;
  s.max_cone_radius = a.max_cone_radius;
  s.ball = a.in.ball();
  return s;
}

void cmd_automaton(const AutomatonArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const GeodesicAcceptor acc = build_acceptor(doc.gens, schedule_for(a, doc));
  err << "acceptor: " << acc.size() << " states, cone radius " << acc.cone_radius << ", train radius "
      << acc.train_radius << '\n';
  write_output(a.output, serialize_acceptor(acc), out);
}

TransferBundle transfer_for(const AutomatonArgs& a, const SpecDocument& doc) {
  DifferenceSchedule d;
  d.bound = a.diff_bound;
  d.cap = a.diff_cap;
  return build_transfer(doc.gens, schedule_for(a, doc), d);
}

void cmd_matrices(const AutomatonArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const TransferBundle b = transfer_for(a, doc);
  err << "transfer: " << b.matrices.size << " states, difference bound " << b.difference_bound << ", acceptor "
      << b.acceptor.size() << " states\n";
  write_output(a.output, serialize(b), out);
}

Word word_over(const std::vector<std::string>& alphabet, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto it = std::find(alphabet.begin(), alphabet.end(), tok);
    if (it == alphabet.end()) throw ParseError("unknown generator '" + tok + "' in word");
    w.push_back(static_cast<GenIndex>(it - alphabet.begin()));
  }
  return w;
}

void cmd_eval(const AutomatonArgs& a, std::ostream& out, std::ostream& err) {
  TransferBundle b;
  if (!a.bundle.empty()) {
    if (!a.in.spec_file.empty() || !a.in.preset.empty()) throw UsageError("give either --bundle or a spec, not both");
    b = deserialize(read_file(a.bundle));
  } else {
    b = transfer_for(a, load(a.in, err));
  }
  out << pascal_via_matrices(b, word_over(b.acceptor.alphabet(), a.word)) << '\n';
}

void cmd_growth(const AutomatonArgs& a, std::ostream& out, std::ostream& err) {
  const SpecDocument doc = load(a.in, err);
  const LanguageGrowth g = language_growth(build_acceptor(doc.gens, schedule_for(a, doc)), a.max_length);
  out << g.label() << "; counts ";
  for (std::size_t i = 0; i < g.counts.size(); ++i) out << (i ? "," : "") << g.counts[i];
  out << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  AutomatonArgs automaton;
  std::size_t radius = 8;
  std::string fault;
};

struct CheckRow {
  std::string check;
  std::string result;
  std::size_t compared = 0;
  std::string detail;
};

struct Mismatch {
  std::string element, expected, got, path;
};

void cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  if (!v.fault.empty() && v.fault != "binomial" && v.fault != "matrix")
    throw UsageError("--inject-fault takes binomial or matrix");
  const bool bad_binomial = v.fault == "binomial", bad_matrix = v.fault == "matrix";
  const SpecDocument doc = load(v.automaton.in, err);
  const GroupSpec& spec = doc.spec;
  const Ball ball = Ball::build(doc.gens, v.radius, v.automaton.in.ball());
  std::vector<CheckRow> rows;
  std::optional<Mismatch> first;
  auto mismatch = [&](CheckRow& row, Ball::Index g, const BigCount& expected, const BigCount& got) {
    row.result = "mismatch";
    row.detail = to_string(spec, ball.value(g)) + ": expected " + to_decimal(expected) + ", got " + to_decimal(got);
    if (!first) first = Mismatch{to_string(spec, ball.value(g)), to_decimal(expected), to_decimal(got), row.check};
  };

  {
    CheckRow row{"recurrence", "ok", 0, ""};
    for (Ball::Index g = 0; g < ball.size() && row.result == "ok"; ++g) {
      BigCount sum = g == 0 ? BigCount(1) : BigCount(0);
      for (const auto& p : ball.predecessors(g)) sum += ball.count(p.parent);
      ++row.compared;
      if (sum != ball.count(g)) mismatch(row, g, ball.count(g), sum);
    }
    rows.push_back(row);
  }
  {
    CheckRow row{"inverse-symmetry", "ok", 0, ""};
    for (Ball::Index g = 0; g < ball.size() && row.result == "ok"; ++g) {
      const auto h = ball.find(inverse(spec, ball.value(g)));
      ++row.compared;
      if (!h || ball.length(*h) != ball.length(g)) {
        row.result = "mismatch";
        row.detail = "length of the inverse of " + to_string(spec, ball.value(g)) + " differs";
        if (!first) first = Mismatch{to_string(spec, ball.value(g)), std::to_string(ball.length(g)), "?", row.check};
      } else if (ball.count(*h) != ball.count(g)) {
        mismatch(row, g, ball.count(g), ball.count(*h));
      }
    }
    rows.push_back(row);
  }

  if (spec.kind() == GroupKind::DirectProduct || spec.kind() == GroupKind::FreeProduct) {
    const bool direct = spec.kind() == GroupKind::DirectProduct;
    CheckRow row{direct ? "direct-product" : "free-product", "ok", 0, ""};
    try {
      const ProductPascal pp(doc.gens, v.radius, v.automaton.in.ball());
      for (Ball::Index g = 0; g < ball.size() && row.result == "ok"; ++g) {
        const GroupValue gv = ball.value(g);
        BigCount got;
        std::size_t length;
        if (direct) {
          const auto l = pp.left_ball().find(gv.left());
          const auto r = pp.right_ball().find(gv.right());
          const auto la = pp.left_ball().length(*l), lb = pp.right_ball().length(*r);
          got = (binomial(la + lb, la) + (bad_binomial ? 1 : 0)) * pp.left_ball().count(*l) * pp.right_ball().count(*r);
          length = la + lb;
        } else {
          const auto val = pp.evaluate(gv);
          got = val.count;
          length = val.length;
        }
        ++row.compared;
        if (length != ball.length(g)) {
          row.result = "mismatch";
          row.detail = "length of " + to_string(spec, gv) + " differs";
          if (!first) first = Mismatch{to_string(spec, gv), std::to_string(ball.length(g)), std::to_string(length), row.check};
        } else if (got != ball.count(g)) {
          mismatch(row, g, ball.count(g), got);
        }
      }
    } catch (const UnsupportedGeneratingSet& e) {
      row.result = "skipped";
      row.detail = e.what();
    }
    rows.push_back(row);
  }

  {
    CheckRow row{"abelian-monoid", "ok", 0, ""};
    try {
      const AbelianContext ctx(doc.gens);
      const ConvexBody body = unit_ball(ctx);
      const auto sets = maximal_compatible_sets(ctx, body);
      for (Ball::Index g = 0; g < ball.size() && row.result == "ok"; ++g)
        for (const auto& s : sets) {
          const auto mp = monoid_pascal(ctx, s.generators, ball.value(g), ball.length(g));
          if (!mp.in_monoid) continue;
          ++row.compared;
          const BigCount got = mp.count + (bad_binomial ? 1 : 0);
          if (got != ball.count(g)) {
            mismatch(row, g, ball.count(g), got);
            break;
          }
        }
      row.detail = std::to_string(sets.size()) + " maximal compatible sets";
    } catch (const StructuralError& e) {
      row.result = "skipped";
      row.detail = e.what();
    } catch (const DimensionDeficiency& e) {
      row.result = "skipped";
      row.detail = e.what();
    }
    rows.push_back(row);
  }

  {
    CheckRow row{"transfer-matrices", "ok", 0, ""};
    try {
      TransferBundle b = transfer_for(v.automaton, doc);
      if (bad_matrix) {
        // Bump the first entry of the first generator's matrix.
        auto& m = b.matrices.m.at(0);
        for (State s = 0; s < m.size(); ++s)
          if (!m.row(s).empty()) {
            m.add(s, m.row(s).front().first, 1);
            break;
          }
      }
      const MatrixCheck mc = validate_matrices(b, ball);
      row.compared = mc.compared;
      row.detail = std::to_string(b.matrices.size) + " states, difference bound " + std::to_string(b.difference_bound) +
                   ", " + std::to_string(mc.second_geodesics) + " second geodesics";
      if (!mc.ok) mismatch(row, *mc.mismatch, mc.expected, mc.got);
    } catch (const ConstructionError& e) {
      row.result = "skipped";
      row.detail = e.what();
    } catch (const InsufficientRadius& e) {
      row.result = "skipped";
      row.detail = e.what();
    }
    rows.push_back(row);
  }

  const auto one = pascal_identically_one(ball);
  if (one.holds) rows.push_back({"identically-one", "verified", ball.size(), "p = 1 on the radius-" + std::to_string(v.radius) + " ball"});

  out << "check\tresult\tcompared\tdetail\n";
  for (const auto& r : rows) out << r.check << '\t' << r.result << '\t' << r.compared << '\t' << r.detail << '\n';
  if (one.holds && !first) out << "p \xE2\x89\xA1 1 verified\n";
  if (first)
    throw VerificationFailure("element=" + first->element + " expected=" + first->expected + " got=" + first->got +
                              " path=" + first->path);
}

void cmd_presets(const Input& in, std::ostream& out) {
  for (const auto& n : preset_names(preset_dir(in))) out << n << '\n';
}

// --------------------------------------------------------------- driver

void add_automaton_flags(CLI::App* cmd, AutomatonArgs& a) {
  add_input(cmd, a.in);
  cmd->add_option("--train-radius", a.train_radius, "Training radius R for cone types");
  cmd->add_option("--cone-radius", a.cone_radius, "Cone radius r (default: try 2, 3, ...)");
  cmd->add_option("--max-cone-radius", a.max_cone_radius, "Largest cone radius the schedule tries")
      ->capture_default_str();
}

void add_difference_flags(CLI::App* cmd, AutomatonArgs& a) {
  cmd->add_option("--diff-bound", a.diff_bound, "Word-difference bound D (default: 2, 4, 8, ...)");
  cmd->add_option("--diff-cap", a.diff_cap, "Largest D the schedule tries")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pascal's function: counts of geodesics in Cayley graphs", "pascal"};
  app.require_subcommand(1);

  BallArgs ball_args;
  auto* ball = app.add_subcommand("ball", "Lengths and geodesic counts of a Cayley ball");
  add_input(ball, ball_args.in);
  ball->add_option("--radius", ball_args.radius, "Ball radius")->required();
  ball->add_option("--format", ball_args.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

  TriangleArgs tri_args;
  auto* tri = app.add_subcommand("triangle", "Grid of p(i, j) on the first quadrant of Z^2");
  add_input(tri, tri_args.in);
  tri->add_option("--size", tri_args.size, "Grid size n")->required();

  Input hull_in;
  auto* hull = app.add_subcommand("hull", "Unit ball of the translation length norm");
  add_input(hull, hull_in);

  TauArgs tau_args;
  auto* tau = app.add_subcommand("tau", "Exact translation length of an element");
  add_input(tau, tau_args.in);
  tau->add_option("--element", tau_args.element, "Element in the spec value encoding, e.g. [3,1]");
  tau->add_option("--word", tau_args.word, "Element as a word, e.g. \"t t s\"");
  tau->add_option("--samples", tau_args.samples, "Also print l(g^j)/j for this j");

  CompatibleArgs comp_args;
  auto* comp = app.add_subcommand("compatible", "Face criterion for generator subsets");
  add_input(comp, comp_args.in);
  comp->add_option("--max-size", comp_args.max_size, "Largest subset size")->capture_default_str();
  comp->add_option("--empirical", comp_args.empirical, "N R: cross-check by geodesic search")->expected(2);

  AutomatonArgs auto_args;
  auto* automaton = app.add_subcommand("automaton", "Build the geodesic acceptor");
  add_automaton_flags(automaton, auto_args);
  automaton->add_option("-o,--output", auto_args.output, "Output file (default stdout)");

  AutomatonArgs mat_args;
  auto* matrices = app.add_subcommand("matrices", "Build the transfer-matrix bundle");
  add_automaton_flags(matrices, mat_args);
  add_difference_flags(matrices, mat_args);
  matrices->add_option("-o,--output", mat_args.output, "Output file (default stdout)");

  AutomatonArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate p on a geodesic word via transfer matrices");
  add_automaton_flags(eval, eval_args);
  add_difference_flags(eval, eval_args);
  eval->add_option("--bundle", eval_args.bundle, "Bundle written by `pascal matrices`");
  eval->add_option("--word", eval_args.word, "Geodesic word, generator names separated by spaces")->required();

  VerifyArgs verify_args;
  verify_args.automaton.diff_cap = 16;
  auto* verify = app.add_subcommand("verify", "Check every applicable fast path against the ball");
  add_automaton_flags(verify, verify_args.automaton);
  add_difference_flags(verify, verify_args.automaton);
  verify->add_option("--radius", verify_args.radius, "Ball radius")->capture_default_str();
  verify->add_option("--inject-fault", verify_args.fault, "Harness self-test: binomial or matrix");

  AutomatonArgs growth_args;
  auto* growth = app.add_subcommand("growth", "Growth class of the geodesic language");
  add_automaton_flags(growth, growth_args);
  growth->add_option("--max-length", growth_args.max_length, "Longest length counted")->capture_default_str();

  Input presets_in;
  auto* presets = app.add_subcommand("presets", "List built-in presets");
  presets->add_option("--preset-dir", presets_in.preset_dir, "Directory holding preset files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error:usage " << e.what() << '\n';
    return kUsage;
  }

  auto fail = [&](int code, const char* token, const std::exception& e) {
    err << "error:" << token << ' ' << e.what() << '\n';
    return code;
  };
  try {
    if (*ball) cmd_ball(ball_args, out, err);
    else if (*tri) cmd_triangle(tri_args, out, err);
    else if (*hull) cmd_hull(hull_in, out, err);
    else if (*tau) cmd_tau(tau_args, out, err);
    else if (*comp) cmd_compatible(comp_args, out, err);
    else if (*automaton) cmd_automaton(auto_args, out, err);
    else if (*matrices) cmd_matrices(mat_args, out, err);
    else if (*eval) cmd_eval(eval_args, out, err);
    else if (*verify) cmd_verify(verify_args, out, err);
    else if (*growth) cmd_growth(growth_args, out, err);
    else if (*presets) cmd_presets(presets_in, out);
  } catch (const VerificationFailure& e) {
    return fail(kVerification, "verification", e);
  } catch (const UsageError& e) {
    return fail(kUsage, "usage", e);
  } catch (const ParseError& e) {
    return fail(kParse, "parse", e);
  } catch (const ResourceError& e) {
    return fail(kResource, "resource", e);
  } catch (const InsufficientRadius& e) {
    return fail(kResource, "insufficient-radius", e);
  } catch (const InconsistentConeRadius& e) {
    return fail(kConstruction, "inconsistent-cone-radius", e);
  } catch (const DifferenceOverflow& e) {
    return fail(kConstruction, "difference-overflow", e);
  } catch (const ConstructionError& e) {
    return fail(kConstruction, "construction", e);
  } catch (const NonGeodesicInput& e) {
    return fail(kUsage, "non-geodesic", e);
  } catch (const UnsupportedGeneratingSet& e) {
    return fail(kUsage, "unsupported-generating-set", e);
  } catch (const DimensionDeficiency& e) {
    return fail(kUsage, "dimension-deficiency", e);
  } catch (const StructuralError& e) {
    return fail(kUsage, "structural", e);
  } catch (const pascal::Error& e) {
    return fail(kUsage, "usage", e);
  } catch (const std::bad_alloc& e) {
    return fail(kResource, "resource", e);
  }
  return kOk;
}

}  // namespace pascal::cli
