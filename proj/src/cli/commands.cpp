#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecketree/cli.hpp"
#include "hecketree/tree_oracle.hpp"

namespace hecketree::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string family;
  int q = 0, q0 = 0, q1 = 0, qs = 0, qt = 0;
  long p = 0;
  unsigned max = 3;
  unsigned len = 2;
  unsigned depth = 1;
  bool inverted = false;
  std::string format = "json";
  std::size_t max_ball_vertices = kDefaultMaxBallVertices;
  std::vector<std::string> labels;
  std::string input;
  std::string example;
  std::size_t levels = 0;
};

// ------------------------------------------------------------ parameters

SphericalParams spherical_params(const Options& o) {
  if (o.q > 0 && o.q0 == 0 && o.q1 == 0) return SphericalParams::homogeneous(o.q);
  if (o.q == 0 && o.q0 > 0 && o.q1 > 0) return SphericalParams::two_orbit(o.q0, o.q1);
  throw std::invalid_argument("spherical needs either --q or both --q0 and --q1");
}

IwahoriParams iwahori_params(const Options& o) {
  if (o.q > 0 && o.qs == 0 && o.qt == 0) return IwahoriParams(o.q, o.q);
  if (o.qs > 0 && o.qt > 0 && o.q == 0) return IwahoriParams(o.qs, o.qt);
  throw std::invalid_argument("iwahori needs either --q or both --qs and --qt");
}

int affine_q(const Options& o) {
  if (o.q < 2) throw std::invalid_argument("affine needs --q >= 2");
  return o.q;
}

long sl2_p(const Options& o) {
  if (!is_prime(o.p)) throw std::invalid_argument("sl2 needs a prime --p");
  return o.p;
}

json params_json(Family f, const Options& o) {
  json j = json::object();
  switch (f) {
    case Family::spherical: {
      const SphericalParams p = spherical_params(o);
      if (p.is_two_orbit()) {
        j["q0"] = p.q0();
        j["q1"] = p.q1();
      } else {
        j["q"] = p.q0();
      }
      j["max"] = o.max;
      break;
    }
    case Family::iwahori: {
      const IwahoriParams p = iwahori_params(o);
      j["qs"] = p.qs();
      j["qt"] = p.qt();
      j["len"] = o.len;
      j["inverted"] = o.inverted;
      break;
    }
    case Family::affine:
      j["q"] = affine_q(o);
      j["max"] = o.max;
      break;
    case Family::sl2:
      j["p"] = sl2_p(o);
      j["depth"] = o.depth;
      break;
  }
  return j;
}

std::vector<ExtendedIndex> edge_indices(const Options& o, const IwahoriParams& p) {
  if (o.inverted && !p.admits_inversion())
    throw std::invalid_argument("--inverted needs qs == qt");
  return iwahori_indices(o.len, o.inverted);
}

// ------------------------------------------------------------ records

json record_json(const OutputRecord& r) {
  json value = json::array();
  for (const auto& [label, c] : r.value) value.push_back(json::array({label, c}));
  return json{{"family", family_name(r.family)},
              {"key", json::array({r.left, r.right})},
              {"value", value}};
}

std::vector<OutputRecord> table_records(Family f, const Options& o) {
  std::vector<OutputRecord> out;
  switch (f) {
    case Family::spherical: {
      const SphericalParams p = spherical_params(o);
      auto label = [&](SphericalIndex i) { return spherical_label(i, p); };
      for (unsigned n = 0; n <= o.max; ++n)
        for (unsigned m = 0; m <= o.max; ++m)
          out.push_back(make_record(f, label({n}), label({m}), multiply_closed(n, m, p), label));
      break;
    }
    case Family::iwahori: {
      const IwahoriParams p = iwahori_params(o);
      auto label = [](const ExtendedIndex& i) { return i.to_string(); };
      const auto idx = edge_indices(o, p);
      for (const auto& a : idx)
        for (const auto& b : idx)
          out.push_back(make_record(f, label(a), label(b), multiply(a, b, p), label));
      break;
    }
    case Family::affine: {
      const int q = affine_q(o);
      for (unsigned m = 0; m <= o.max; ++m)
        for (unsigned n = 0; n <= o.max; ++n)
          out.push_back(make_record(f, m_label({m}), m_label({n}), m_multiply(m, n, q), m_label));
      break;
    }
    case Family::sl2: {
      const auto cosets = double_cosets(sl2_p(o), o.depth);
      for (const auto& a : cosets)
        for (const auto& b : cosets)
          out.push_back(make_record(f, a.representative.to_string(),
                                    b.representative.to_string(),
                                    sl2_m_multiply(a.representative, b.representative),
                                    coset_label));
      break;
    }
  }
  return out;
}

void emit_records(std::ostream& out, Family f, const Options& o,
                  const std::vector<OutputRecord>& records) {
  if (o.format == "csv") {
    out << "family,left,right,terms\n";
    for (const auto& r : records)
      out << family_name(r.family) << ',' << r.left << ',' << r.right << ',' << csv_terms(r)
          << '\n';
    return;
  }
  json doc{{"family", family_name(f)}, {"params", params_json(f, o)}, {"records", json::array()}};
  for (const auto& r : records) doc["records"].push_back(record_json(r));
  out << doc.dump(2) << '\n';
}

OutputRecord mul_record(Family f, const Options& o) {
  if (o.labels.size() != 2) throw std::invalid_argument("mul needs exactly two basis labels");
  const std::string& l = o.labels[0];
  const std::string& r = o.labels[1];
  switch (f) {
    case Family::spherical: {
      const SphericalParams p = spherical_params(o);
      auto label = [&](SphericalIndex i) { return spherical_label(i, p); };
      const auto a = parse_spherical_label(l, p), b = parse_spherical_label(r, p);
      return make_record(f, label(a), label(b), multiply_closed(a.n, b.n, p), label);
    }
    case Family::iwahori: {
      const IwahoriParams p = iwahori_params(o);
      const auto a = ExtendedIndex::parse(l), b = ExtendedIndex::parse(r);
      auto label = [](const ExtendedIndex& i) { return i.to_string(); };
      if ((a.iflag || b.iflag) && !p.admits_inversion())
        throw std::invalid_argument("inverted labels need qs == qt");
      return make_record(f, label(a), label(b), multiply(a, b, p), label);
    }
    case Family::affine: {
      const int q = affine_q(o);
      const auto a = parse_m_label(l), b = parse_m_label(r);
      return make_record(f, m_label(a), m_label(b), m_multiply(a.n, b.n, q), m_label);
    }
    case Family::sl2: {
      const long p = sl2_p(o);
      const auto a = parse_coset_label(l, p), b = parse_coset_label(r, p);
      return make_record(f, coset_label(a), coset_label(b),
                         sl2_m_multiply(a.representative, b.representative), coset_label);
    }
  }
  throw std::logic_error("unreachable family");
}

// ------------------------------------------------------------ verification

struct Mismatch {
  std::string left, right, target;
  std::vector<std::pair<std::string, std::string>> values;
};

struct CellResult {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
};

/// Runs cell(i) for i in [0, n) on worker threads and returns results in
/// index order.
std::vector<CellResult> run_cells(std::size_t n, const std::function<CellResult(std::size_t)>& cell) {
  std::vector<CellResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = cell(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned k = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// Compares named coefficient maps over the union of their keys.
template <typename Index, typename LabelFn>
void compare_named(CellResult& res, const std::string& left, const std::string& right,
                   const std::vector<std::pair<std::string, const HeckeElement<Index>*>>& sources,
                   LabelFn label) {
  std::map<Index, bool> keys;
  for (const auto& [name, x] : sources)
    for (const auto& [idx, c] : *x) keys[idx] = true;
  for (const auto& [idx, unused] : keys) {
    ++res.checked;
    const Coefficient ref = sources.front().second->coefficient(idx);
    bool same = true;
    for (const auto& [name, x] : sources) same = same && x->coefficient(idx) == ref;
    if (same) continue;
    Mismatch m{left, right, label(idx), {}};
    for (const auto& [name, x] : sources) m.values.emplace_back(name, x->coefficient(idx).to_string());
    res.mismatches.push_back(std::move(m));
  }
}

struct Relation {
  std::string name;
  bool holds;
};

struct VerifyOutcome {
  std::vector<CellResult> cells;
  std::vector<Relation> relations;
};

VerifyOutcome verify_spherical(const Options& o) {
  const SphericalParams p = spherical_params(o);
  const int step = p.step();
  const TreeBall ball = TreeBall::build(p.q0(), p.q1(), step * 2 * static_cast<int>(o.max),
                                        o.max_ball_vertices);
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned n = 0; n <= o.max; ++n)
    for (unsigned m = n; m <= o.max; ++m) cells.emplace_back(n, m);
  auto label = [&](SphericalIndex i) { return spherical_label(i, p); };
  VerifyOutcome out;
  out.cells = run_cells(cells.size(), [&](std::size_t i) {
    const auto [n, m] = cells[i];
    CellResult res;
    const SphericalElement closed = multiply_closed(n, m, p);
    const SphericalElement recursive = multiply_recursive(n, m, p);
    const auto counts = oracle::spherical_product(ball, step * static_cast<int>(n),
                                                  step * static_cast<int>(m));
    SphericalElement counted;
    for (std::size_t d = 0; d < counts.size(); ++d) {
      if (counts[d] == 0) continue;
      if (d % static_cast<std::size_t>(step) != 0) {
        ++res.checked;
        res.mismatches.push_back({label({n}), label({m}), "G" + std::to_string(d),
                                  {{"oracle", Coefficient(counts[d]).to_string()}}});
        continue;
      }
      counted.add_term({static_cast<unsigned>(d / static_cast<std::size_t>(step))},
                       Coefficient(counts[d]));
    }
    compare_named<SphericalIndex>(res, label({n}), label({m}),
                                  {{"closed", &closed}, {"recursive", &recursive}, {"oracle", &counted}},
                                  label);
    return res;
  });
  return out;
}

VerifyOutcome verify_iwahori(const Options& o) {
  const IwahoriParams p = iwahori_params(o);
  const auto idx = edge_indices(o, p);
  const TreeBall ball = TreeBall::build(p.qs(), p.qt(), oracle::edge_required_radius(2 * o.len),
                                        o.max_ball_vertices);
  const oracle::IwahoriOracle orc(ball, o.inverted);
  auto label = [](const ExtendedIndex& i) { return i.to_string(); };
  VerifyOutcome out;
  out.cells = run_cells(idx.size() * idx.size(), [&](std::size_t i) {
    const ExtendedIndex& a = idx[i / idx.size()];
    const ExtendedIndex& b = idx[i % idx.size()];
    CellResult res;
    const IwahoriElement gen = multiply(a, b, p);
    const IwahoriElement closed = multiply_closed(a, b, p);
    IwahoriElement counted;
    for (const auto& [u, c] : orc.product(a, b)) counted.add_term(u, Coefficient(c));
    compare_named<ExtendedIndex>(res, label(a), label(b),
                                 {{"generators", &gen}, {"closed", &closed}, {"oracle", &counted}},
                                 label);
    return res;
  });
  const ExtendedIndex one{}, i_idx = ExtendedIndex::inversion();
  for (Letter r : {Letter::s, Letter::t}) {
    const ExtendedIndex d(DihedralWord::single(r));
    IwahoriElement want = IwahoriElement::basis(one, p.q(r));
    want.add_term(d, p.q(r) - 1);
    out.relations.push_back({std::string("D") + to_char(r) + "^2 = q + (q-1)D" + to_char(r),
                             multiply(d, d, p) == want});
  }
  if (o.inverted) {
    const IwahoriAlgebra alg(p);
    out.relations.push_back({"Di^2 = 1", multiply(i_idx, i_idx, p) == IwahoriElement::basis(one)});
    const IwahoriElement isi = multiply(alg, multiply(i_idx, ExtendedIndex::parse("s"), p),
                                        IwahoriElement::basis(i_idx));
    out.relations.push_back({"Di Ds Di = Dt", isi == IwahoriElement::basis(ExtendedIndex::parse("t"))});
  }
  return out;
}

VerifyOutcome verify_affine(const Options& o) {
  const int q = affine_q(o);
  const TreeBall ball = TreeBall::build(q, q, 2 * static_cast<int>(o.max), o.max_ball_vertices);
  const MarkedRay ray = MarkedRay::first_child_branch(ball);
  VerifyOutcome out;
  const unsigned w = o.max + 1;
  out.cells = run_cells(w * w, [&](std::size_t i) {
    const unsigned m = static_cast<unsigned>(i / w), n = static_cast<unsigned>(i % w);
    CellResult res;
    const MElement table = m_multiply(m, n, q);
    const MElement nf = nf_to_m(nf_multiply(m_to_nf(m, q), m_to_nf(n, q)));
    MElement counted;
    const auto counts = oracle::horocycle_product(ball, ray, static_cast<int>(m), static_cast<int>(n));
    for (std::size_t k = 0; k < counts.size(); ++k)
      counted.add_term({static_cast<unsigned>(k)}, Coefficient(counts[k]));
    compare_named<MBasisIndex>(res, m_label({m}), m_label({n}),
                               {{"table", &table}, {"normal_form", &nf}, {"oracle", &counted}},
                               m_label);
    return res;
  });
  out.relations.push_back({"[s*][s] = q", nf_multiply(ToeplitzNF::s_star(q), ToeplitzNF::s(q)) ==
                                              Coefficient(q) * ToeplitzNF::unit(q)});
  out.relations.push_back({"[s][s*] != q", nf_multiply(ToeplitzNF::s(q), ToeplitzNF::s_star(q)) !=
                                               Coefficient(q) * ToeplitzNF::unit(q)});
  return out;
}

VerifyOutcome verify_sl2(const Options& o) {
  const long p = sl2_p(o);
  const auto cosets = double_cosets(p, o.depth);
  const PruferGroupAlgebra group(p);
  VerifyOutcome out;
  const std::size_t w = cosets.size();
  out.cells = run_cells(w * w, [&](std::size_t i) {
    const PruferElement& u = cosets[i / w].representative;
    const PruferElement& v = cosets[i % w].representative;
    CellResult res;
    const PruferGroupElement direct = multiply(group, nu(u), nu(v));
    Sl2Element pulled;
    try {
      pulled = sl2_m_multiply(u, v);
    } catch (const std::logic_error& e) {
      res.mismatches.push_back({u.to_string(), v.to_string(), "partition", {{"error", e.what()}}});
      return res;
    }
    const PruferGroupElement pushed = nu(pulled);
    auto label = [](const PruferElement& h) { return h.to_string(); };
    compare_named<PruferElement>(res, u.to_string(), v.to_string(),
                                 {{"group_algebra", &direct}, {"nu_of_pullback", &pushed}}, label);
    const Sl2Element swapped = sl2_m_multiply(v, u);
    compare_named<CosetIndex>(res, u.to_string(), v.to_string(),
                              {{"uv", &pulled}, {"vu", &swapped}}, coset_label);
    return res;
  });
  return out;
}

int cmd_verify(Family f, const Options& o, std::ostream& out) {
  VerifyOutcome v;
  switch (f) {
    case Family::spherical: v = verify_spherical(o); break;
    case Family::iwahori: v = verify_iwahori(o); break;
    case Family::affine: v = verify_affine(o); break;
    case Family::sl2: v = verify_sl2(o); break;
  }
  std::size_t checked = 0;
  json mismatches = json::array();
  for (const CellResult& c : v.cells) {
    checked += c.checked;
    for (const Mismatch& m : c.mismatches) {
      json values = json::object();
      for (const auto& [name, val] : m.values) values[name] = val;
      mismatches.push_back(json{{"left", m.left}, {"right", m.right}, {"target", m.target}, {"values", values}});
    }
  }
  json relations = json::array();
  bool relations_ok = true;
  for (const Relation& r : v.relations) {
    relations.push_back(json{{"relation", r.name}, {"holds", r.holds}});
    relations_ok = relations_ok && r.holds;
  }
  const bool pass = mismatches.empty() && relations_ok;
  json doc{{"family", family_name(f)},
           {"params", params_json(f, o)},
           {"cells", v.cells.size()},
           {"checked", checked},
           {"relations", relations},
           {"mismatches", mismatches},
           {"status", pass ? "PASS" : "FAIL"}};
  out << doc.dump(2) << '\n';
  return pass ? 0 : 1;
}

// ------------------------------------------------------------ ktheory, nu

json group_json(const AbelianGroupPresentation& g) {
  json torsion = json::array();
  for (const Integer& d : g.invariant_factors) torsion.push_back(d.get_str());
  return json{{"group", g.to_string()}, {"free_rank", g.free_rank}, {"torsion", torsion}};
}

json pv_json(const PvGroups& g) {
  return json{{"K0", group_json(g.k0)}, {"K1_rank", g.k1_rank}};
}

std::string matrix_string(const IntegerMatrix& m) {
  std::ostringstream s;
  s << m;
  return s.str();
}

json limit_json(const LimitReport& r) {
  json levels = json::array();
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const LevelReport& l = r.levels[k];
    levels.push_back(json{{"level", k},
                          {"group", AbelianGroupPresentation{l.rank, {}}.to_string()},
                          {"composed_map", matrix_string(l.composed)},
                          {"composed_cokernel", group_json(l.composed_cokernel)},
                          {"composed_kernel_rank", l.composed_kernel_rank},
                          {"incoming_injective", l.incoming_injective}});
  }
  return json{{"levels", levels}, {"stabilized", r.stabilized}};
}

int cmd_ktheory(const Options& o, std::ostream& out) {
  if (o.input.empty() == o.example.empty())
    throw std::invalid_argument("ktheory needs exactly one of --input and --example");
  json doc = json::object();
  if (!o.example.empty()) {
    if (o.example != "toeplitz")
      throw std::invalid_argument("unknown example '" + o.example + "' (known: toeplitz)");
    const std::size_t levels = o.levels == 0 ? 6 : o.levels;
    const BratteliDiagram d = toeplitz_bratteli_diagram(levels);
    const ShiftStage stage = toeplitz_shift_stage(levels);
    doc["source"] = "toeplitz";
    doc["limit"] = limit_json(truncated_limit(d, levels - 1));
    doc["pv"] = pv_json(pv_k_groups(stage.alpha, stage.inclusion));
  } else {
    std::ifstream f(o.input);
    if (!f) throw std::invalid_argument("cannot read '" + o.input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const KtheoryInput in = parse_ktheory_json(buf.str());
    const std::size_t K = o.levels == 0 ? in.diagram.levels.size() - 1 : o.levels - 1;
    doc["source"] = "input";
    doc["limit"] = limit_json(truncated_limit(in.diagram, K));
    if (in.alpha)
      doc["pv"] = pv_json(in.inclusion ? pv_k_groups(*in.alpha, *in.inclusion)
                                       : pv_k_groups(*in.alpha));
  }
  out << doc.dump(2) << '\n';
  return 0;
}

int cmd_nu(const Options& o, std::ostream& out) {
  const long p = sl2_p(o);
  const auto cosets = double_cosets(p, o.depth);
  json list = json::array();
  for (const auto& c : cosets) {
    json orbit = json::array();
    for (const auto& h : c.orbit) orbit.push_back(h.to_string());
    list.push_back(json{{"representative", c.representative.to_string()},
                        {"depth", c.representative.depth()},
                        {"orbit", orbit},
                        {"size", c.orbit.size()}});
  }
  json records = json::array();
  for (const auto& r : table_records(Family::sl2, o)) records.push_back(record_json(r));
  json doc{{"p", p}, {"depth", o.depth}, {"cosets", list}, {"records", records}};
  out << doc.dump(2) << '\n';
  return 0;
}

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Branching parameter (homogeneous tree)");
  cmd->add_option("--q0", o.q0, "Even-vertex branching (two-orbit spherical)");
  cmd->add_option("--q1", o.q1, "Odd-vertex branching (two-orbit spherical)");
  cmd->add_option("--qs", o.qs, "q_s for the edge algebra");
  cmd->add_option("--qt", o.qt, "q_t for the edge algebra");
  cmd->add_option("--p", o.p, "Prime for the sl2 family");
  cmd->add_option("--max", o.max, "Largest basis index (spherical, affine)");
  cmd->add_option("--len", o.len, "Largest word length (iwahori)");
  cmd->add_option("--depth", o.depth, "Largest depth (sl2)");
  cmd->add_flag("--inverted", o.inverted, "Include i-decorated words (iwahori, qs == qt)");
}

}  // namespace

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HECKETREE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Hecke algebras of groups acting on trees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format for table and mul")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-ball-vertices", o.max_ball_vertices,
                 "Vertex budget for oracle balls in verify");

  auto* table = app.add_subcommand("table", "Emit a multiplication table");
  table->add_option("family", o.family, "spherical | iwahori | affine | sl2")->required();
  add_family_options(table, o);

  auto* mul = app.add_subcommand("mul", "Multiply two basis elements");
  mul->add_option("family", o.family, "spherical | iwahori | affine | sl2")->required();
  mul->add_option("labels", o.labels, "Two basis labels")->expected(2)->required();
  add_family_options(mul, o);

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the tree oracle");
  verify->add_option("family", o.family, "spherical | iwahori | affine | sl2")->required();
  add_family_options(verify, o);

  auto* kt = app.add_subcommand("ktheory", "Bratteli limits and crossed-product K-groups");
  kt->add_option("--input", o.input, "Bratteli diagram JSON file");
  kt->add_option("--example", o.example, "Built-in example: toeplitz");
  kt->add_option("--levels", o.levels, "Number of levels to use");

  auto* nucmd = app.add_subcommand("nu", "Double cosets and table for SL2(Q_p)");
  nucmd->add_option("--p", o.p, "Prime")->required();
  nucmd->add_option("--depth", o.depth, "Largest depth")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*table) {
      const Family f = parse_family(o.family);
      emit_records(out, f, o, table_records(f, o));
      return 0;
    }
    if (*mul) {
      const Family f = parse_family(o.family);
      emit_records(out, f, o, {mul_record(f, o)});
      return 0;
    }
    if (*verify) return cmd_verify(parse_family(o.family), o, out);
    if (*kt) return cmd_ktheory(o, out);
    if (*nucmd) return cmd_nu(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hecketree::cli
