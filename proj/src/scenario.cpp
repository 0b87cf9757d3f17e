#include "scenario.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace cforge {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= uint8_t(c);
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint32_t mult_order(PrimeField f, uint32_t a) {
  if (a == 0) throw std::invalid_argument("mult_order: zero has no order");
  uint32_t acc = a, k = 1;
  while (acc != 1) {
    acc = f.mul(acc, a);
    ++k;
  }
  return k;
}

// character of the cyclic subgroup generated by the parent element `base`,
// sending base to `value`; the sub-table's own generator list may be
// redundant, so each listed generator gets value raised to its discrete log
Representation cyclic_power_character(const Subgroup& h, uint32_t base, PrimeField f,
                                      uint32_t value) {
  const auto g = h.group();
  const uint32_t b = h.to_sub(base);
  if (g->element_order(b) != g->order())
    throw std::invalid_argument("cyclic_power_character: base does not generate");
  std::vector<uint32_t> exponent(g->order(), 0);
  uint32_t cur = GroupTable::identity();
  for (uint32_t k = 0; k < g->order(); ++k) {
    exponent[cur] = k;
    cur = g->mul(cur, b);
  }
  std::vector<MatrixF> images;
  for (uint32_t s : g->generators()) {
    MatrixF m(f, 1, 1);
    m.set(0, 0, f.pow(value, exponent[s]));
    images.push_back(m);
  }
  return rep_from_generators(g, f, images);
}

// F_p[t]/(h) with elements of K^* encoded as 1 + sum c_i p^i - 1 style
// values in [1, p^r); value v has base-p digits equal to the coefficients
struct KField {
  PrimeField f;
  Polynomial h;
  uint32_t r;
  uint32_t q;  // p^r

  Polynomial from_value(uint32_t v) const {
    std::vector<uint32_t> c;
    while (v) {
      c.push_back(v % f.modulus());
      v /= f.modulus();
    }
    return Polynomial(f, std::move(c));
  }
  uint32_t to_value(const Polynomial& a) const {
    uint32_t v = 0;
    for (int i = a.degree(); i >= 0; --i) v = v * f.modulus() + a.coeff(uint32_t(i));
    return v;
  }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return poly_mod(a * b, h); }
  // the action of Frobenius^e: a -> a^(p^e) mod h
  Polynomial frob(const Polynomial& a, uint32_t e) const {
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) pe *= f.modulus();
    return poly_powmod(a, pe, h);
  }
};

KField make_kfield(uint32_t p, uint32_t r) {
  PrimeField f(p);
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > 100000) throw std::invalid_argument("crossed product: p^r out of range");
  }
  // first monic irreducible of degree r in lexicographic coefficient order
  for (uint32_t low = 0;; ++low) {
    if (low >= q) throw std::logic_error("crossed product: no irreducible polynomial found");
    std::vector<uint32_t> c;
    uint32_t v = low;
    for (uint32_t i = 0; i < r; ++i) {
      c.push_back(v % p);
      v /= p;
    }
    c.push_back(1);
    Polynomial cand(f, std::move(c));
    if (poly_is_irreducible(cand)) return KField{f, cand, r, uint32_t(q)};
  }
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s, const std::string& claim) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("claim '" + claim + "' expects true or false, got '" + s + "'");
}

}  // namespace

std::mt19937_64 rng_for(uint64_t seed, const std::string& key) {
  return std::mt19937_64(splitmix(seed ^ fnv1a(key)));
}

const std::vector<std::string>& scenario_claim_ids() {
  static const std::vector<std::string> ids = {
      "invariant", "induced-irreducible", "end-degree", "extends",
      "split",     "division-iff",        "end-dims"};
  return ids;
}

void validate_scenario(const Scenario& sc) {
  if (!same_group_table(*sc.module_w.group(), *sc.normal_sub.group()))
    throw std::invalid_argument("scenario module is not over the normal subgroup");
  if (sc.module_w.field() != sc.field)
    throw std::invalid_argument("scenario module field does not match the scenario field");
  if (!sc.normal_sub.is_normal())
    throw std::invalid_argument("scenario subgroup is not normal");
  const auto& known = scenario_claim_ids();
  std::vector<std::string> seen;
  for (const auto& [id, exp] : sc.expected) {
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw std::invalid_argument("unknown claim id '" + id + "'");
    if (std::find(seen.begin(), seen.end(), id) != seen.end())
      throw std::invalid_argument("duplicate claim '" + id + "'");
    seen.push_back(id);
    if (id == "invariant" || id == "induced-irreducible" || id == "extends" || id == "split")
      parse_bool(exp, id);
    if (id == "end-degree") {
      if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos ||
          exp == "0")
        throw std::invalid_argument("claim 'end-degree' expects a positive integer, got '" +
                                    exp + "'");
    }
    if (id == "division-iff" && exp != "true")
      throw std::invalid_argument("claim 'division-iff' expects true, got '" + exp + "'");
    if (id == "end-dims" && exp != "record")
      throw std::invalid_argument("claim 'end-dims' expects the word record, got '" + exp + "'");
    if ((id == "division-iff" || id == "end-dims") && !sc.crossed)
      throw std::invalid_argument("claim '" + id + "' requires a crossed-product scenario");
  }
}

Scenario build_radical_example(uint32_t p, uint32_t m, uint32_t a) {
  PrimeField f(p);
  if (m < 2) throw std::invalid_argument("radical example: degree m must exceed 1");
  if (a == 0 || a >= p)
    throw std::invalid_argument("radical example: a must be a nonzero residue mod p");
  std::vector<uint32_t> coeffs(m + 1, 0);
  coeffs[0] = f.neg(a);
  coeffs[m] = 1;
  const Polynomial poly(f, coeffs);
  if (!poly_is_irreducible(poly))
    throw std::invalid_argument("radical example: " + poly.to_text() + " is reducible over F_" +
                                std::to_string(p));
  const uint32_t n = mult_order(f, a);
  if (uint64_t(m) * n > GroupTable::kMaxOrder)
    throw std::invalid_argument("radical example: group order " + std::to_string(m * n) +
                                " exceeds the table cap");
  const GroupPtr g = cyclic_group(m * n);
  const Subgroup nsub = subgroup_generated(g, {m});
  Representation w = cyclic_power_character(nsub, m, f, a);
  w.set_tag("root-power");

  Scenario sc{"radical(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",a=" +
                  std::to_string(a) + ")",
              f,
              g,
              nsub,
              std::move(w),
              {{"invariant", "true"},
               {"induced-irreducible", "true"},
               {"end-degree", std::to_string(m)},
               {"extends", "false"},
               {"split", "false"}},
              std::nullopt};
  validate_scenario(sc);
  return sc;
}

Scenario build_crossed_product(uint32_t p, uint32_t r, uint32_t gamma_power,
                               const std::vector<uint32_t>& f_table) {
  if (r == 0) throw std::invalid_argument("crossed product: r must be positive");
  const KField k = make_kfield(p, r);
  const uint32_t units = k.q - 1;
  const uint32_t step = gamma_power % r;
  const uint32_t m = step == 0 ? 1 : r / std::gcd(r, step);

  std::vector<uint32_t> f_vals(size_t(m) * m, 1);
  if (!f_table.empty()) {
    if (f_table.size() != size_t(m) * m)
      throw std::invalid_argument("crossed product: factor table needs " + std::to_string(m * m) +
                                  " entries, got " + std::to_string(f_table.size()));
    f_vals = f_table;
  }
  for (uint32_t v : f_vals)
    if (v == 0 || v >= k.q)
      throw std::invalid_argument("crossed product: factor value " + std::to_string(v) +
                                  " is not a unit encoding");
  auto fat = [&](uint32_t i, uint32_t j) { return k.from_value(f_vals[size_t(i) * m + j]); };
  for (uint32_t i = 0; i < m; ++i)
    if (k.to_value(fat(0, i)) != 1 || k.to_value(fat(i, 0)) != 1)
      throw std::invalid_argument("crossed product: factor table is not normalized");
  // cocycle law with the Galois action: f(st,u) f(s,t)^u = f(s,tu) f(t,u)
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      for (uint32_t l = 0; l < m; ++l) {
        const Polynomial lhs = k.mul(fat((i + j) % m, l), k.frob(fat(i, j), step * l % r));
        const Polynomial rhs = k.mul(fat(i, (j + l) % m), fat(j, l));
        if (lhs != rhs)
          throw std::invalid_argument("crossed product: factor table violates the cocycle law at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(l) + ")");
      }

  const uint32_t order = m * units;
  if (order > GroupTable::kMaxOrder)
    throw std::invalid_argument("crossed product: group order " + std::to_string(order) +
                                " exceeds the table cap");
  // element (s_i, kv) at index i*units + kv - 1; x_s k * x_t l = x_{st}(f(s,t) k^t l)
  std::vector<std::vector<uint32_t>> table(order, std::vector<uint32_t>(order));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t ka = 1; ka <= units; ++ka) {
      const Polynomial a = k.from_value(ka);
      for (uint32_t j = 0; j < m; ++j) {
        const Polynomial a_tau = k.frob(a, step * j % r);
        for (uint32_t kb = 1; kb <= units; ++kb) {
          const Polynomial prod = k.mul(k.mul(fat(i, j), a_tau), k.from_value(kb));
          table[i * units + ka - 1][j * units + kb - 1] =
              ((i + j) % m) * units + k.to_value(prod) - 1;
        }
      }
    }
  std::string fmark = "1";
  if (!f_table.empty()) {
    bool trivial = true;
    for (uint32_t v : f_vals) trivial = trivial && v == 1;
    if (!trivial) {
      if (f_vals.size() <= 4) {
        fmark.clear();
        for (size_t i = 0; i < f_vals.size(); ++i)
          fmark += (i ? "." : "") + std::to_string(f_vals[i]);
      } else {
        std::ostringstream hx;
        hx << std::hex << fnv1a(std::string(f_vals.begin(), f_vals.end()));
        fmark = "h" + hx.str();
      }
    }
  }
  const std::string gname = "Cross(" + std::to_string(p) + "," + std::to_string(r) + "," +
                            std::to_string(step) + ")";
  const GroupPtr g = group_from_table(table, gname);

  std::vector<uint32_t> nmembers(units);
  std::iota(nmembers.begin(), nmembers.end(), 0);
  const Subgroup nsub = subgroup_generated(g, nmembers);

  // W = K as a K^*-module: the element of value s+1 acts by multiplication
  std::vector<MatrixF> wimgs;
  for (uint32_t s : nsub.group()->generators()) {
    const Polynomial kv = k.from_value(s + 1);
    MatrixF img(k.f, r, r);
    for (uint32_t c = 0; c < r; ++c) {
      std::vector<uint32_t> mono(c + 1, 0);
      mono[c] = 1;
      const Polynomial col = k.mul(kv, Polynomial(k.f, mono));
      for (uint32_t row = 0; row < r; ++row) img.set(row, c, col.coeff(row));
    }
    wimgs.push_back(std::move(img));
  }
  Representation w = rep_from_generators(nsub.group(), k.f, wimgs);
  w.set_tag("K-module");

  // left regular module of the algebra: basis x_{s_i} t^c at index i*r + c,
  // generated by left multiplication by x_{s_1} and by the K-generator
  const Polynomial theta = r >= 2 ? Polynomial::x(k.f) : Polynomial::constant(k.f, 1);
  std::vector<MatrixF> agens;
  if (m > 1) {
    MatrixF lx(k.f, m * r, m * r);
    for (uint32_t i = 0; i < m; ++i)
      for (uint32_t c = 0; c < r; ++c) {
        std::vector<uint32_t> mono(c + 1, 0);
        mono[c] = 1;
        const Polynomial col = k.mul(fat(1, i), Polynomial(k.f, mono));
        for (uint32_t row = 0; row < r; ++row)
          lx.set(((1 + i) % m) * r + row, i * r + c, col.coeff(row));
      }
    agens.push_back(std::move(lx));
  }
  MatrixF lt(k.f, m * r, m * r);
  for (uint32_t i = 0; i < m; ++i) {
    const Polynomial theta_i = k.frob(theta, step * i % r);
    for (uint32_t c = 0; c < r; ++c) {
      std::vector<uint32_t> mono(c + 1, 0);
      mono[c] = 1;
      const Polynomial col = k.mul(theta_i, Polynomial(k.f, mono));
      for (uint32_t row = 0; row < r; ++row) lt.set(i * r + row, i * r + c, col.coeff(row));
    }
  }
  agens.push_back(std::move(lt));

  CrossedProduct cp{k.h, m, step, f_vals, AlgebraModule{k.f, m * r, std::move(agens)}};
  Scenario sc{"crossed(p=" + std::to_string(p) + ",r=" + std::to_string(r) + ",s=" +
                  std::to_string(step) + ",f=" + fmark + ")",
              k.f,
              g,
              nsub,
              std::move(w),
              {{"invariant", "true"}, {"division-iff", "true"}, {"end-dims", "record"}},
              std::move(cp)};
  validate_scenario(sc);
  return sc;
}

namespace {

struct Keyed {
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string read_file_or_throw(const std::string& path, int line_no) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read referenced file " + path, line_no);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupPtr parse_group_value(const std::string& value, const std::string& base_dir,
                           const std::string& name, int line_no) {
  if (value.rfind("perm:", 0) == 0) {
    const std::string body = value.substr(5);
    std::vector<std::string> gens;
    std::string cur;
    for (char c : body) {
      if (c == ';') {
        gens.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    gens.push_back(cur);
    bool has_point = false;
    for (char c : body)
      if (std::isdigit(uint8_t(c))) has_point = true;
    if (!has_point) throw ParseError("perm: group needs at least one moved point", line_no);
    // degree = 1 + largest point mentioned
    uint32_t maxpt = 0;
    for (size_t i = 0; i < body.size();) {
      if (std::isdigit(uint8_t(body[i]))) {
        uint32_t v = 0;
        while (i < body.size() && std::isdigit(uint8_t(body[i]))) v = v * 10 + (body[i++] - '0');
        maxpt = std::max(maxpt, v);
      } else {
        ++i;
      }
    }
    std::ostringstream text;
    text << "perm " << (maxpt + 1) << "\n";
    for (const auto& gl : gens) text << gl << "\n";
    try {
      return parse_group_text(text.str(), name);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in perm: value: ") + e.what(), line_no);
    }
  }
  if (value.rfind("table:@", 0) == 0) {
    const std::string rel = trim(value.substr(7));
    const std::string path = (std::filesystem::path(base_dir) / rel).string();
    try {
      return parse_group_text(read_file_or_throw(path, line_no), name);
    } catch (const ParseError& e) {
      throw ParseError("in " + rel + ": " + e.what(), line_no);
    }
  }
  throw ParseError("group= expects perm:<cycles>;... or table:@<file>", line_no);
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& base_dir,
                             const std::string& id) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  std::optional<Keyed> field_kv, group_kv, normal_kv, module_kv;
  std::vector<std::pair<std::string, Keyed>> claim_kvs;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const size_t eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    auto set_once = [&](std::optional<Keyed>& slot) {
      if (slot) throw ParseError("duplicate key " + key, line_no);
      slot = Keyed{value, line_no};
    };
    if (key == "field") {
      set_once(field_kv);
    } else if (key == "group") {
      set_once(group_kv);
    } else if (key == "normal") {
      set_once(normal_kv);
    } else if (key == "module") {
      set_once(module_kv);
    } else if (key == "claim") {
      const size_t sp = value.find(' ');
      if (sp == std::string::npos)
        throw ParseError("claim= expects '<id> <expected>'", line_no);
      claim_kvs.emplace_back(trim(value.substr(0, sp)),
                             Keyed{trim(value.substr(sp + 1)), line_no});
    } else {
      throw ParseError("unknown key " + key, line_no);
    }
  }
  for (auto [slot, key] : {std::pair<const std::optional<Keyed>*, const char*>{&field_kv, "field"},
                           {&group_kv, "group"},
                           {&normal_kv, "normal"},
                           {&module_kv, "module"}})
    if (!*slot) throw ParseError(std::string("missing key ") + key, line_no + 1);
  if (claim_kvs.empty()) throw ParseError("scenario declares no claims", line_no + 1);

  uint32_t p = 0;
  try {
    size_t used = 0;
    p = uint32_t(std::stoul(field_kv->value, &used));
    if (used != field_kv->value.size()) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw ParseError("field= expects a prime number", field_kv->line);
  }
  std::optional<PrimeField> f;
  try {
    f = PrimeField(p);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), field_kv->line);
  }

  const GroupPtr g = parse_group_value(group_kv->value, base_dir, id, group_kv->line);

  std::vector<uint32_t> seeds;
  {
    std::string v = normal_kv->value;
    for (char& c : v)
      if (c == ',') c = ' ';
    std::istringstream ns(v);
    int64_t idx;
    while (ns >> idx) {
      if (idx < 0 || idx >= int64_t(g->order()))
        throw ParseError("normal= index out of range", normal_kv->line);
      seeds.push_back(uint32_t(idx));
    }
    if (seeds.empty()) throw ParseError("normal= expects element indices", normal_kv->line);
  }
  const Subgroup n = subgroup_generated(g, seeds);
  if (!n.is_normal())
    throw ParseError("normal= does not generate a normal subgroup", normal_kv->line);

  if (module_kv->value.empty() || module_kv->value[0] != '@')
    throw ParseError("module= expects @<file>", module_kv->line);
  const std::string mpath =
      (std::filesystem::path(base_dir) / module_kv->value.substr(1)).string();
  Representation w = [&] {
    try {
      return rep_from_text(read_file_or_throw(mpath, module_kv->line), n.group());
    } catch (const ParseError& e) {
      throw ParseError("in " + module_kv->value.substr(1) + ": " + e.what(), module_kv->line);
    } catch (const std::exception& e) {
      throw ParseError("in " + module_kv->value.substr(1) + ": " + e.what(), module_kv->line);
    }
  }();

  std::vector<std::pair<std::string, std::string>> expected;
  for (const auto& [cid, kv] : claim_kvs) expected.emplace_back(cid, kv.value);
  Scenario sc{id, *f, g, n, std::move(w), std::move(expected), std::nullopt};
  try {
    validate_scenario(sc);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), claim_kvs.front().second.line);
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read scenario file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  const std::filesystem::path fp(path);
  return parse_scenario_text(os.str(), fp.parent_path().string(), fp.filename().string());
}

std::vector<ReportEntry> run_scenario(const Scenario& sc, uint64_t seed, bool timing) {
  validate_scenario(sc);
  std::vector<ReportEntry> out;
  std::optional<Representation> v_cache;
  auto induced_v = [&]() -> const Representation& {
    if (!v_cache) v_cache = induce(sc.module_w, sc.normal_sub);
    return *v_cache;
  };

  for (const auto& [cid, exp] : sc.expected) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportEntry e{sc.id, cid, "FAIL", "", 0};
    auto rng = rng_for(seed, sc.id + "/" + cid);
    try {
      if (cid == "invariant") {
        const InertiaResult ir = inertia_group(sc.module_w, sc.normal_sub, rng);
        const bool got = ir.t.order() == sc.group->order();
        e.verdict = got == parse_bool(exp, cid) ? "PASS" : "FAIL";
        e.witness = "inertia order " + std::to_string(ir.t.order()) + " of " +
                    std::to_string(sc.group->order());
      } else if (cid == "induced-irreducible") {
        const bool got = is_irreducible(module_of(induced_v()), rng);
        e.verdict = got == parse_bool(exp, cid) ? "PASS" : "FAIL";
        e.witness = "induced dim " + std::to_string(induced_v().dim()) +
                    (got ? " irreducible" : " reducible");
      } else if (cid == "end-degree") {
        const auto basis = end_ring(module_of(induced_v()));
        const FieldRecognition fr = recognize_field(basis, sc.field, rng);
        const bool got = fr.kind == FieldRecognition::Field &&
                         std::to_string(fr.degree) == exp;
        e.verdict = got ? "PASS" : "FAIL";
        if (fr.kind == FieldRecognition::Field)
          e.witness = "endomorphism field of degree " + std::to_string(fr.degree);
        else if (fr.kind == FieldRecognition::NotField)
          e.witness = "endomorphism ring of dim " + std::to_string(basis.size()) +
                      " has a zero divisor";
        else
          e.witness = "field recognition undecided";
      } else if (cid == "extends") {
        const bool got = extend_ordinary(sc.module_w, sc.normal_sub, rng).has_value();
        e.verdict = got == parse_bool(exp, cid) ? "PASS" : "FAIL";
        e.witness = got ? "extension found" : "no extension";
      } else if (cid == "split") {
        const bool got = is_split_extension(sc.group, sc.normal_sub);
        e.verdict = got == parse_bool(exp, cid) ? "PASS" : "FAIL";
        e.witness = got ? "complement found" : "no complement";
      } else if (cid == "division-iff") {
        const bool vi = is_irreducible(module_of(induced_v()), rng);
        const bool ai = is_irreducible(sc.crossed->regular, rng);
        e.verdict = vi == ai ? "PASS" : "FAIL";
        e.witness = std::string("induced module ") + (vi ? "irreducible" : "reducible") +
                    ", crossed product " + (ai ? "is" : "is not") + " a division ring";
      } else if (cid == "end-dims") {
        const uint32_t over_n =
            uint32_t(end_ring(module_of(restrict_rep(induced_v(), sc.normal_sub))).size());
        const uint32_t over_g = uint32_t(end_ring(module_of(induced_v())).size());
        const uint32_t cp = sc.crossed->regular.dim;
        std::string match = "none";
        if (over_g == cp && over_n == cp)
          match = "both";
        else if (over_g == cp)
          match = "full-group";
        else if (over_n == cp)
          match = "normal-subgroup";
        e.verdict = "INFO";
        e.witness = "End over normal subgroup dim " + std::to_string(over_n) +
                    ", over full group dim " + std::to_string(over_g) + ", crossed product dim " +
                    std::to_string(cp) + "; matches: " + match;
      }
    } catch (const std::exception& ex) {
      e.verdict = "FAIL";
      e.witness = std::string("error: ") + ex.what();
    }
    if (timing)
      e.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   t0)
                 .count();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cforge
