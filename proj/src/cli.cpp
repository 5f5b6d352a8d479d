#include "rghw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "rghw/codes.hpp"
#include "rghw/weights.hpp"

namespace rghw::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <class Int>
Int parse_int(std::string_view text, std::size_t line, std::string_view key) {
  text = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(line, "invalid integer '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

Range parse_range(std::string_view text, std::size_t line, std::string_view key) {
  text = trim(text);
  Range out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    out.lo = parse_int<std::uint64_t>(text.substr(0, dots), line, key);
    out.hi = parse_int<std::uint64_t>(text.substr(dots + 2), line, key);
  } else {
    out.lo = out.hi = parse_int<std::uint64_t>(text, line, key);
  }
  if (out.lo < 1 || out.lo > out.hi) {
    throw ConfigError(line, "invalid range '" + std::string(text) + "' for " + std::string(key));
  }
  return out;
}

const std::set<std::string, std::less<>> kFunctions = {"fp", "delta", "vasconcelos", "bruteforce",
                                                       "singleton"};

struct QueryDraft {
  QuerySpec spec;
  std::optional<std::size_t> k1;
  std::size_t k1_line = 0;
  std::size_t g_line = 0;
  std::set<std::string, std::less<>> seen;
};

}  // namespace

ProblemConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  ProblemConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::vector<QueryDraft> drafts;
  std::string points_kind;
  std::size_t line_no = 0;
  std::size_t factors_line = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[query]") throw ConfigError(line_no, "unknown section " + std::string(line));
      drafts.push_back({});
      drafts.back().spec.line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (drafts.empty()) {
      if (!seen.insert(key).second) throw ConfigError(line_no, "duplicate key " + key);
      if (key == "q") {
        cfg.q = parse_int<std::uint32_t>(value, line_no, key);
        if (!is_prime(cfg.q)) throw ConfigError(line_no, "q = " + std::to_string(cfg.q) + " is not prime");
      } else if (key == "s") {
        cfg.s = parse_int<std::size_t>(value, line_no, key);
        if (cfg.s < 1 || cfg.s > kMaxVariables) {
          throw ConfigError(line_no, "s must lie in [1, " + std::to_string(kMaxVariables) + "]");
        }
      } else if (key == "points") {
        points_kind = value;
        if (value == "torus") {
          cfg.source = PointSource::torus;
        } else if (value == "cartesian") {
          cfg.source = PointSource::cartesian;
        } else if (value == "file") {
          cfg.source = PointSource::file;
        } else if (value == "ideal") {
          cfg.source = PointSource::ideal;
        } else {
          throw ConfigError(line_no, "points must be torus, cartesian, file or ideal");
        }
      } else if (key == "factors") {
        factors_line = line_no;
        for (auto part : split(value, ';')) {
          std::vector<std::int64_t> factor;
          for (auto v : split(part, ',')) factor.push_back(parse_int<std::int64_t>(v, line_no, key));
          cfg.factors.push_back(std::move(factor));
        }
      } else if (key == "points_file") {
        cfg.points_file = std::filesystem::path(std::string(value));
        if (cfg.points_file.is_relative() && !base_dir.empty()) cfg.points_file = base_dir / cfg.points_file;
      } else if (key == "generators") {
        cfg.generators = value;
        cfg.generators_line = line_no;
      } else if (key == "order") {
        try {
          MonomialOrder::parse(value);
        } catch (const Error& e) {
          throw ConfigError(line_no, e.what());
        }
        cfg.order = value;
      } else if (key == "budget") {
        cfg.budget = parse_int<std::uint64_t>(value, line_no, key);
      } else {
        throw ConfigError(line_no, "unknown key " + key);
      }
      continue;
    }
    QueryDraft& q = drafts.back();
    if (!q.seen.insert(key).second) throw ConfigError(line_no, "duplicate key " + key);
    if (key == "d") {
      q.spec.degrees = parse_range(value, line_no, key);
    } else if (key == "r") {
      if (value != "all") q.spec.ranks = parse_range(value, line_no, key);
    } else if (key == "G") {
      q.g_line = line_no;
      for (auto part : split(value, ',')) {
        if (part.empty()) {
          if (value.empty()) break;
          throw ConfigError(line_no, "empty polynomial in G");
        }
        q.spec.subcode.emplace_back(part);
      }
    } else if (key == "k1") {
      q.k1 = parse_int<std::size_t>(value, line_no, key);
      q.k1_line = line_no;
    } else if (key == "function") {
      if (!kFunctions.contains(value)) {
        throw ConfigError(line_no, "function must be fp, delta, vasconcelos, bruteforce or singleton");
      }
      q.spec.function = value;
    } else {
      throw ConfigError(line_no, "unknown query key " + key);
    }
  }

  if (cfg.q == 0) throw ConfigError(0, "missing key q");
  if (points_kind.empty()) throw ConfigError(0, "missing key points");
  if (cfg.source == PointSource::cartesian) {
    if (cfg.factors.empty()) throw ConfigError(0, "points = cartesian needs factors");
    if (cfg.s == 0) cfg.s = cfg.factors.size() + 1;
    if (cfg.s != cfg.factors.size() + 1) {
      throw ConfigError(factors_line, "expected s - 1 = " + std::to_string(cfg.s - 1) + " factors");
    }
  }
  if (cfg.s == 0) throw ConfigError(0, "missing key s");
  if (cfg.source == PointSource::file && cfg.points_file.empty()) {
    throw ConfigError(0, "points = file needs points_file");
  }
  if (cfg.source == PointSource::ideal && cfg.generators.empty()) {
    throw ConfigError(0, "points = ideal needs generators");
  }
  const RingPtr ring = PolynomialRing::make(cfg.q, cfg.s, MonomialOrder::parse(cfg.order));
  if (!cfg.generators.empty()) {
    try {
      parse_polynomial_list(cfg.generators, ring);
    } catch (const ParseError& e) {
      throw ConfigError(cfg.generators_line, std::string("generators: ") + e.what());
    }
  }
  for (auto& q : drafts) {
    if (!q.seen.contains("d")) throw ConfigError(q.spec.line, "query without d");
    for (const auto& g : q.spec.subcode) {
      try {
        parse_polynomial(g, ring);
      } catch (const ParseError& e) {
        throw ConfigError(q.g_line, "G: " + std::string(e.what()));
      }
    }
    if (q.k1 && *q.k1 != q.spec.subcode.size()) {
      throw ConfigError(q.k1_line, "k1 = " + std::to_string(*q.k1) + " but G has " +
                                       std::to_string(q.spec.subcode.size()) + " polynomials");
    }
    cfg.queries.push_back(std::move(q.spec));
  }
  return cfg;
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

namespace {

MonomialOrder active_order(const ProblemConfig& config, const RunOptions& options) {
  try {
    return MonomialOrder::parse(options.order.value_or(config.order));
  } catch (const Error& e) {
    throw ConfigError(0, e.what());
  }
}

std::string reference_torus_text(std::size_t s, std::uint32_t q) {
  std::string out;
  for (std::size_t i = 1; i < s; ++i) {
    if (!out.empty()) out += ", ";
    out += "t" + std::to_string(i) + "^" + std::to_string(q - 1) + " - t" + std::to_string(s) + "^" +
           std::to_string(q - 1);
  }
  return out;
}

}  // namespace

Problem build_problem(const ProblemConfig& config, const RunOptions& options) {
  const MonomialOrder order = active_order(config, options);
  const PrimeField field(config.q);
  const RingPtr ring = std::make_shared<const PolynomialRing>(field, config.s, order);
  auto from_points = [&](ProjectivePointSet x) {
    Ideal ix = vanishing_ideal(x, order);
    return Problem{ring, ix, std::move(x), ix, true, "I = I_X by construction"};
  };
  switch (config.source) {
    case PointSource::torus:
      if (config.s < 2) throw ConfigError(0, "points = torus needs s >= 2");
      return from_points(projective_torus(config.q, config.s));
    case PointSource::cartesian:
      try {
        return from_points(affine_cartesian(field, config.factors));
      } catch (const InvalidArgument& e) {
        throw ConfigError(0, std::string("factors: ") + e.what());
      }
    case PointSource::file: {
      std::ifstream in(config.points_file, std::ios::binary);
      if (!in) throw ConfigError(0, "cannot open points_file " + config.points_file.string());
      std::stringstream buffer;
      buffer << in.rdbuf();
      try {
        auto x = parse_point_list(buffer.str(), field);
        if (x.ambient() != config.s) {
          throw ConfigError(0, "points_file has " + std::to_string(x.ambient()) +
                                   " coordinates per point, expected s = " + std::to_string(config.s));
        }
        return from_points(std::move(x));
      } catch (const ParseError& e) {
        throw ConfigError(0, config.points_file.string() + ": " + e.what());
      } catch (const InvalidArgument& e) {
        throw ConfigError(0, config.points_file.string() + ": " + e.what());
      }
    }
    case PointSource::ideal:
      break;
  }
  std::vector<Polynomial> gens;
  try {
    gens = parse_polynomial_list(config.generators, ring);
  } catch (const ParseError& e) {
    throw ConfigError(config.generators_line, std::string("generators: ") + e.what());
  }
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) {
      throw ConfigError(config.generators_line, "generator " + format(g) + " is not homogeneous");
    }
  }
  Ideal ideal(ring, gens);
  const auto space = projective_space(config.q, config.s);
  const auto zeros = zero_set(space, gens);
  if (zeros.empty()) {
    return Problem{ring, ideal, std::nullopt, std::nullopt, false,
                   "not certified: the generators have no common zero in P^" +
                       std::to_string(config.s - 1)};
  }
  auto x = space.subset(zeros);
  Ideal ix = vanishing_ideal(x, order);
  const bool ix_in_i = ideal.contains(ix);
  const bool i_in_ix = ix.contains(ideal);
  std::string note;
  if (ix_in_i && i_in_ix) {
    note = "I = I_X for the " + std::to_string(x.size()) + " zeros of I (mutual membership)";
  } else {
    note = "not certified: ";
    if (!ix_in_i) note += "I_X is not contained in I";
    if (!ix_in_i && !i_in_ix) note += "; ";
    if (!i_in_ix) note += "I is not contained in I_X";
  }
  const bool certified = ix_in_i && i_in_ix;
  return Problem{ring, ideal, std::move(x), ix, certified, note};
}

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, Format format) const {
    if (format == Format::csv) {
      write_csv_row(out, header_);
      for (const auto& row : rows_) write_csv_row(out, row);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& row : rows_) widen(row);
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) line += "  ";
        line += std::string(width[i] - row[i].size(), ' ') + row[i];
      }
      out << line << '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
  }

 private:
  static void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::vector<Polynomial> parse_subcode(const QuerySpec& q, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& text : q.subcode) out.push_back(parse_polynomial(text, ring));
  return out;
}

std::string subcode_text(const std::vector<Polynomial>& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out += "; ";
    out += format(g[i]);
  }
  return out + "}";
}

void require_degree(const QuerySpec& q, const std::vector<Polynomial>& g, std::uint64_t d) {
  for (const auto& f : g) {
    if (f.is_zero() || !f.is_homogeneous(d)) {
      throw ConfigError(q.line, "G element " + format(f) + " is not a form of degree " +
                                    std::to_string(d));
    }
  }
}

// Everything needed to evaluate the functions of one (query, d) pair.
struct DegreeContext {
  std::uint64_t d;
  std::size_t k;
  std::vector<Polynomial> g;
  std::optional<EvaluationCode> code;
  std::optional<SubcodeSpec> sub;
};

DegreeContext prepare(const Problem& problem, const QuerySpec& q, std::uint64_t d) {
  DegreeContext ctx{d, static_cast<std::size_t>(problem.ideal.hilbert_function(d)),
                    parse_subcode(q, problem.ring), std::nullopt, std::nullopt};
  require_degree(q, ctx.g, d);
  if (ctx.g.size() > ctx.k) {
    throw ConfigError(q.line, "k1 = " + std::to_string(ctx.g.size()) + " exceeds k = " +
                                  std::to_string(ctx.k) + " at d = " + std::to_string(d));
  }
  try {
    if (problem.points && problem.certified) {
      ctx.code = build_code(*problem.points, problem.ideal, d);
      ctx.sub = validate_subcode(*ctx.code, ctx.g);
    } else if (!ctx.g.empty()) {
      const auto se = standard_echelon(problem.ideal, d, ctx.g);
      if (se.dependency) throw InvalidArgument("G is dependent modulo I");
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(q.line, e.what());
  }
  return ctx;
}

std::vector<std::size_t> ranks_for(const QuerySpec& q, std::size_t max_rank) {
  std::vector<std::size_t> out;
  const std::size_t lo = q.ranks ? q.ranks->lo : 1;
  const std::size_t hi = q.ranks ? std::min<std::uint64_t>(q.ranks->hi, max_rank) : max_rank;
  for (std::size_t r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

constexpr const char* kBudgetCell = "budget";
constexpr const char* kUnavailable = "n/a";

struct Cell {
  std::string text;
  bool budget_exceeded = false;
};

template <class F>
Cell guarded(F&& compute) {
  try {
    return {compute(), false};
  } catch (const BudgetExceeded&) {
    return {kBudgetCell, true};
  }
}

}  // namespace

int run_hilbert(const ProblemConfig& config, const RunOptions& options, std::ostream& out) {
  const Problem problem = build_problem(config, options);
  const auto summary = problem.ideal.degree_of_quotient();
  std::uint64_t top = summary.reg_index.value_or(summary.hilbert_values.size() - 1);
  for (const auto& q : config.queries) top = std::max(top, q.degrees.hi);
  top = std::max<std::uint64_t>(top, 1);
  Table t({"d", "H"});
  for (std::uint64_t d = 0; d <= top; ++d) {
    t.add({std::to_string(d), std::to_string(problem.ideal.hilbert_function(d))});
  }
  t.write(out, options.format);
  if (options.format == Format::table) {
    out << "dim(S/I) = " << summary.dimension << '\n';
    out << "deg(S/I) = " << summary.degree << '\n';
    if (summary.reg_index) out << "reg_index = " << *summary.reg_index << '\n';
  }
  return kExitOk;
}

int run_vanishing_ideal(const ProblemConfig& config, const RunOptions& options, std::ostream& out) {
  const Problem problem = build_problem(config, options);
  if (!problem.points) throw ConfigError(0, problem.certificate);
  const Ideal& ix = *problem.vanishing;
  const auto& x = *problem.points;
  Table t({"generator"});
  for (const auto& g : ix.groebner_basis()) t.add({format(g)});
  if (options.format == Format::table) {
    out << "vanishing ideal of X, |X| = " << x.size() << ", order "
        << problem.ring->order().name() << '\n';
  }
  t.write(out, options.format);
  if (options.format == Format::csv) return kExitOk;

  const bool vanish = std::all_of(ix.groebner_basis().begin(), ix.groebner_basis().end(),
                                  [&](const Polynomial& g) {
                                    return zero_set(x, std::span(&g, 1)).size() == x.size();
                                  });
  out << "every generator vanishes on X: " << (vanish ? "yes" : "no") << '\n';
  const auto summary = ix.degree_of_quotient();
  bool ranks_match = true;
  const std::uint64_t top = summary.reg_index.value_or(1) + 1;
  for (std::uint64_t d = 1; d <= top; ++d) {
    const auto mons = problem.ring->monomials_of_degree(d);
    ranks_match = ranks_match &&
                  linalg::rank(evaluation_matrix(x, mons), x.field()) == ix.hilbert_function(d);
  }
  out << "H(d) = dim C_X(d) for d <= " << top << ": " << (ranks_match ? "yes" : "no") << '\n';
  if (config.source == PointSource::torus) {
    const auto reference = parse_polynomial_list(reference_torus_text(config.s, config.q), problem.ring);
    const bool equal = ideals_equal(ix, Ideal(problem.ring, reference));
    out << "equal to (" << reference_torus_text(config.s, config.q)
        << ") by mutual membership: " << (equal ? "yes" : "no") << '\n';
  }
  if (config.source == PointSource::ideal) out << "given ideal: " << problem.certificate << '\n';
  return kExitOk;
}

int run_code_info(const ProblemConfig& config, const RunOptions& options, std::ostream& out) {
  const Problem problem = build_problem(config, options);
  if (!problem.points) throw ConfigError(0, problem.certificate);
  const auto summary = problem.vanishing->degree_of_quotient();
  std::set<std::uint64_t> degrees;
  for (const auto& q : config.queries) {
    for (auto d = q.degrees.lo; d <= q.degrees.hi; ++d) degrees.insert(d);
  }
  if (degrees.empty()) degrees.insert(1);
  Table t({"d", "n", "k", "deg", "reg"});
  for (auto d : degrees) {
    const auto code = build_code(*problem.points, *problem.vanishing, d);
    t.add({std::to_string(d), std::to_string(code.length()), std::to_string(code.dimension()),
           std::to_string(summary.degree),
           summary.reg_index ? std::to_string(*summary.reg_index) : kUnavailable});
  }
  t.write(out, options.format);
  if (options.format == Format::table && !problem.certified) out << problem.certificate << '\n';
  return kExitOk;
}

int run_weights(const ProblemConfig& config, const RunOptions& options, std::ostream& out) {
  const Problem problem = build_problem(config, options);
  WeightOptions wopts;
  wopts.budget = options.budget.value_or(config.budget);
  wopts.threads = options.threads;
  EnumerationOptions eopts{wopts.budget, options.threads};
  Table t({"d", "r", "k1", "G", "fp", "delta", "vasconcelos", "Mr", "singleton", "cand_poly",
           "cand_mono", "ms"});
  bool budget_hit = false;
  for (const auto& q : config.queries) {
    for (auto d = q.degrees.lo; d <= q.degrees.hi; ++d) {
      const DegreeContext ctx = prepare(problem, q, d);
      const std::size_t k1 = ctx.g.size();
      for (auto r : ranks_for(q, ctx.k - k1)) {
        const auto start = std::chrono::steady_clock::now();
        std::string cand_mono = "-";
        const Cell fp = guarded([&] {
          const auto w = rgff(problem.ideal, d, r, ctx.g, wopts);
          cand_mono = std::to_string(w.candidates);
          return std::to_string(w.value);
        });
        Cell delta{kUnavailable}, vasc{kUnavailable}, mr{"-"}, singleton{kUnavailable};
        std::string cand_poly = "-";
        if (ctx.code) {
          try {
            const auto w = relative_weights(*ctx.code, *ctx.sub, r, wopts);
            delta.text = std::to_string(w.delta.value);
            vasc.text = std::to_string(w.vasconcelos.value);
            cand_poly = std::to_string(w.delta.candidates);
          } catch (const BudgetExceeded&) {
            delta = vasc = {kBudgetCell, true};
          }
          if (options.with_bruteforce) {
            mr = guarded([&] {
              return std::to_string(rghw_bruteforce(*ctx.code, *ctx.sub, r, eopts).value);
            });
          }
          singleton.text = std::to_string(singleton_bound(*ctx.code, *ctx.sub, r));
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        budget_hit = budget_hit || fp.budget_exceeded || delta.budget_exceeded || mr.budget_exceeded;
        t.add({std::to_string(d), std::to_string(r), std::to_string(k1), subcode_text(ctx.g), fp.text,
               delta.text, vasc.text, mr.text, singleton.text, cand_poly, cand_mono,
               std::to_string(ms)});
      }
    }
  }
  t.write(out, options.format);
  if (options.format == Format::table && !problem.certified) out << problem.certificate << '\n';
  return budget_hit ? kExitBudget : kExitOk;
}

int run_matrix(const ProblemConfig& config, const RunOptions& options, std::ostream& out) {
  const Problem problem = build_problem(config, options);
  WeightOptions wopts;
  wopts.budget = options.budget.value_or(config.budget);
  wopts.threads = options.threads;
  EnumerationOptions eopts{wopts.budget, options.threads};
  bool budget_hit = false;
  bool first = true;
  for (const auto& q : config.queries) {
    std::vector<DegreeContext> contexts;
    std::size_t columns = 0;
    for (auto d = q.degrees.lo; d <= q.degrees.hi; ++d) {
      contexts.push_back(prepare(problem, q, d));
      columns = std::max(columns, contexts.back().k - contexts.back().g.size());
    }
    const bool needs_code = q.function != "fp";
    std::vector<std::string> header{"d"};
    for (std::size_t r = 1; r <= columns; ++r) header.push_back(std::to_string(r));
    Table t(header);
    for (const auto& ctx : contexts) {
      std::vector<std::string> row{std::to_string(ctx.d)};
      const auto ranks = ranks_for(q, ctx.k - ctx.g.size());
      for (std::size_t r = 1; r <= columns; ++r) {
        if (std::find(ranks.begin(), ranks.end(), r) == ranks.end()) {
          row.push_back("-");
          continue;
        }
        if (needs_code && !ctx.code) {
          row.push_back(kUnavailable);
          continue;
        }
        const Cell cell = guarded([&]() -> std::string {
          if (q.function == "fp") return std::to_string(rgff(problem.ideal, ctx.d, r, ctx.g, wopts).value);
          if (q.function == "delta") return std::to_string(rgmdf(*ctx.code, *ctx.sub, r, wopts).value);
          if (q.function == "vasconcelos") {
            return std::to_string(vasconcelos(*ctx.code, *ctx.sub, r, wopts).value);
          }
          if (q.function == "bruteforce") {
            return std::to_string(rghw_bruteforce(*ctx.code, *ctx.sub, r, eopts).value);
          }
          return std::to_string(singleton_bound(*ctx.code, *ctx.sub, r));
        });
        budget_hit = budget_hit || cell.budget_exceeded;
        row.push_back(cell.text);
      }
      t.add(std::move(row));
    }
    if (options.format == Format::table) {
      if (!first) out << '\n';
      out << q.function << ", G = " << subcode_text(contexts.front().g) << '\n';
    }
    first = false;
    t.write(out, options.format);
  }
  return budget_hit ? kExitBudget : kExitOk;
}

int run(std::string_view subcommand, const ProblemConfig& config, const RunOptions& options,
        std::ostream& out, std::ostream& err) {
  try {
    if (subcommand == "hilbert") return run_hilbert(config, options, out);
    if (subcommand == "vanishing-ideal") return run_vanishing_ideal(config, options, out);
    if (subcommand == "code-info") return run_code_info(config, options, out);
    if (subcommand == "weights") return run_weights(config, options, out);
    if (subcommand == "matrix") return run_matrix(config, options, out);
    err << "error: unknown subcommand " << subcommand << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rghw::cli
