#include "suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catalog.hpp"
#include "error.hpp"
#include "mackey.hpp"
#include "poly.hpp"

namespace cforge {
namespace {

// One unit of suite work. fn returns the entries it produced (possibly none,
// when the instance's preconditions filter it out); a throw anywhere inside
// becomes a single FAIL entry under the job's own labels.
struct Job {
  std::string scenario;
  std::string claim;
  std::function<std::vector<ReportEntry>()> fn;
};

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

ReportEntry checked(const std::string& scenario, const std::string& claim, bool timing,
                    const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  ReportEntry e{scenario, claim, "FAIL", "", 0};
  try {
    auto [ok, witness] = body();
    e.verdict = ok ? "PASS" : "FAIL";
    e.witness = std::move(witness);
  } catch (const std::exception& ex) {
    e.witness = std::string("error: ") + ex.what();
  }
  if (timing) e.ms = ms_since(t0);
  return e;
}

// Shared lazy state for one run. Irreducible lists are cached under a key
// naming the table and the prime, so the many instances that revisit the same
// subgroup enumerate its modules once; the guards downstream compare tables by
// content, so handing the same list to distinct Subgroup values is sound.
struct Ctx {
  const SuiteOptions opt;
  std::vector<GroupPtr> groups;
  mutable std::mutex mu;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Representation>>> irr;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Subgroup>>> subs;

  std::shared_ptr<const std::vector<Representation>> irreducibles(const GroupPtr& g,
                                                                  const std::string& key,
                                                                  uint32_t p) const {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = irr.find(key);
      if (it != irr.end()) return it->second;
    }
    auto rng = rng_for(opt.seed, "irr/" + key);
    auto list = std::make_shared<std::vector<Representation>>(
        enumerate_irreducibles(g, PrimeField(p), rng));
    std::lock_guard<std::mutex> lk(mu);
    auto [it, inserted] = irr.emplace(key, std::move(list));
    return it->second;
  }
  std::shared_ptr<const std::vector<Subgroup>> subgroups(const GroupPtr& g) const {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = subs.find(g->name());
      if (it != subs.end()) return it->second;
    }
    auto list = std::make_shared<std::vector<Subgroup>>(all_subgroups(g));
    std::lock_guard<std::mutex> lk(mu);
    auto [it, inserted] = subs.emplace(g->name(), std::move(list));
    return it->second;
  }
  std::string sub_key(const GroupPtr& g, const Subgroup& h, uint32_t p) const {
    return g->name() + "/[" + h.member_label() + "]/p" + std::to_string(p);
  }
  std::string group_key(const GroupPtr& g, uint32_t p) const {
    return g->name() + "/p" + std::to_string(p);
  }
};

std::string joined_dims(const std::vector<uint32_t>& dims) {
  std::string out;
  for (uint32_t d : dims) out += (out.empty() ? "" : "+") + std::to_string(d);
  return out;
}

// --------------------------------------------------------------------------
// mackey

struct Draw {
  Representation rep;
  std::string name;
};

Draw draw_module(const Ctx& ctx, const GroupPtr& g, const std::string& irr_key, uint32_t p,
                 std::mt19937_64& rng) {
  auto list = ctx.irreducibles(g, irr_key, p);
  const uint32_t pick = uint32_t(rng() % (2 + list->size()));
  PrimeField f{p};
  if (pick == 0) return {trivial_rep(g, f), "trivial"};
  if (pick == 1) return {regular_rep(g, f), "regular"};
  return {(*list)[pick - 2], "irr" + std::to_string(pick - 2)};
}

std::vector<ReportEntry> mackey_instance(const Ctx& ctx, const std::string& id, const GroupPtr& g,
                                         const Subgroup& h1, const Subgroup& h2, const Draw& v1,
                                         const Draw& v2, const Draw& vg) {
  std::vector<ReportEntry> out;
  const std::string mods = "V1=" + v1.name + " V2=" + v2.name;
  const bool timing = ctx.opt.timing;

  out.push_back(checked(id, "tensor", timing, [&] {
    const MackeyWitness w = mackey_tensor(v1.rep, h1, v2.rep, h2);
    bool ledger = witness_checks(w);
    std::vector<uint32_t> dims;
    for (const auto& b : w.block_map) {
      const uint32_t stab = intersect_subgroups(h1, conjugate_subgroup(h2, b.y)).order();
      ledger = ledger && b.dim == g->order() / stab * v1.rep.dim() * v2.rep.dim();
      dims.push_back(b.dim);
    }
    return std::pair(ledger, mods + " dim " + std::to_string(w.lhs.dim()) + " = " +
                                 joined_dims(dims));
  }));

  out.push_back(checked(id, "restriction", timing, [&] {
    const MackeyWitness w = mackey_restriction(v2.rep, h2, h1);
    bool ledger = witness_checks(w);
    std::vector<uint32_t> dims;
    for (const auto& b : w.block_map) {
      const uint32_t stab = intersect_subgroups(h1, conjugate_subgroup(h2, b.x)).order();
      ledger = ledger && b.dim == h1.order() / stab * v2.rep.dim();
      dims.push_back(b.dim);
    }
    return std::pair(ledger, "V=" + v2.name + " dim " + std::to_string(w.lhs.dim()) + " = " +
                                 joined_dims(dims));
  }));

  out.push_back(checked(id, "induced-tensor", timing, [&] {
    const MackeyWitness w = resext_iso(v1.rep, h1, vg.rep);
    const bool ok = witness_checks(w) &&
                    w.lhs.dim() == g->order() / h1.order() * v1.rep.dim() * vg.rep.dim();
    return std::pair(ok, "W=" + v1.name + " V=" + vg.name + " dim " +
                             std::to_string(w.lhs.dim()) + " rebuilt as one induction");
  }));

  out.push_back(checked(id, "perm-tensor", timing, [&] {
    const MackeyWitness w = perm_tensor_corollary(h1, v2.rep, h2);
    const uint32_t ind2 = g->order() / h2.order() * v2.rep.dim();
    const bool ok = witness_checks(w) && w.lhs.dim() == g->order() / h1.order() * ind2;
    return std::pair(ok, "V2=" + v2.name + " dim " + std::to_string(w.lhs.dim()));
  }));

  return out;
}

void mackey_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  for (const GroupPtr& g : ctx.groups) {
    auto subs = ctx.subgroups(g);
    for (uint32_t i1 = 0; i1 < subs->size(); ++i1)
      for (uint32_t i2 = 0; i2 < subs->size(); ++i2)
        for (uint32_t p : ctx.opt.primes) {
          const std::string id = "mackey(" + g->name() + ",h" + std::to_string(i1) + ",h" +
                                 std::to_string(i2) + ",p" + std::to_string(p) + ")";
          jobs.push_back({id, "tensor", [&ctx, g, subs, i1, i2, p, id] {
                            const Subgroup& h1 = (*subs)[i1];
                            const Subgroup& h2 = (*subs)[i2];
                            auto rng = rng_for(ctx.opt.seed, id);
                            const Draw v1 =
                                draw_module(ctx, h1.group(), ctx.sub_key(g, h1, p), p, rng);
                            const Draw v2 =
                                draw_module(ctx, h2.group(), ctx.sub_key(g, h2, p), p, rng);
                            const Draw vg = draw_module(ctx, g, ctx.group_key(g, p), p, rng);
                            return mackey_instance(ctx, id, g, h1, h2, v1, v2, vg);
                          }});
        }
  }

  if (!ctx.groups.empty()) {
    for (uint32_t k = 0; k < 100; ++k) {
      const std::string id = "mackey-random" + std::to_string(k);
      jobs.push_back({id, "tensor", [&ctx, id] {
                        auto rng = rng_for(ctx.opt.seed, id);
                        const GroupPtr g = ctx.groups[rng() % ctx.groups.size()];
                        const uint32_t p = ctx.opt.primes[rng() % ctx.opt.primes.size()];
                        auto subs = ctx.subgroups(g);
                        const Subgroup& h1 = (*subs)[rng() % subs->size()];
                        const Subgroup& h2 = (*subs)[rng() % subs->size()];
                        Draw v1 = draw_module(ctx, h1.group(), ctx.sub_key(g, h1, p), p, rng);
                        Draw v2 = draw_module(ctx, h2.group(), ctx.sub_key(g, h2, p), p, rng);
                        Draw vg = draw_module(ctx, g, ctx.group_key(g, p), p, rng);
                        PrimeField f{p};
                        const uint64_t tensor_dim = uint64_t(g->order() / h1.order()) *
                                                    v1.rep.dim() * (g->order() / h2.order()) *
                                                    v2.rep.dim();
                        if (tensor_dim > 512) {
                          v1 = {trivial_rep(h1.group(), f), "trivial"};
                          v2 = {trivial_rep(h2.group(), f), "trivial"};
                          vg = {trivial_rep(g, f), "trivial"};
                        }
                        return mackey_instance(ctx, id, g, h1, h2, v1, v2, vg);
                      }});
    }
  }

  // the worked 9 = 3 + 6 decomposition over an order-2 subgroup of S3
  if (ctx.opt.max_order >= 6 && !ctx.opt.primes.empty()) {
    const uint32_t p = ctx.opt.primes[0];
    jobs.push_back(
        {"mackey(S3-ledger)", "coset-ledger", [&ctx, p] {
           std::vector<ReportEntry> out;
           out.push_back(checked("mackey(S3-ledger)", "coset-ledger", ctx.opt.timing, [&] {
             const GroupPtr g = catalog_group("S3", 6);
             uint32_t t = 0;
             for (uint32_t a = 1; a < g->order(); ++a)
               if (g->element_order(a) == 2) {
                 t = a;
                 break;
               }
             const Subgroup h = subgroup_generated(g, {t});
             PrimeField f{p};
             const Representation one = trivial_rep(h.group(), f);
             const MackeyWitness w = mackey_tensor(one, h, one, h);
             std::vector<uint32_t> dims;
             for (const auto& b : w.block_map) dims.push_back(b.dim);
             std::sort(dims.begin(), dims.end());
             const bool ok = witness_checks(w) && w.lhs.dim() == 9 &&
                             dims == std::vector<uint32_t>{3, 6};
             return std::pair(ok, std::string("dim 9 = 3 + 6 over the two double cosets"));
           }));
           return out;
         }});
  }
}

// --------------------------------------------------------------------------
// clifford / correspondence / glue / collapse grids share the (G, N, p) walk

std::string cond_word(CondStatus s) {
  switch (s) {
    case CondStatus::Holds:
      return "holds";
    case CondStatus::Fails:
      return "fails";
    default:
      return "not-evaluated";
  }
}

template <typename Fn>
void normal_grid(const Ctx& ctx, bool coprime_only, Fn&& emit) {
  for (const GroupPtr& g : ctx.groups) {
    auto subs = ctx.subgroups(g);
    uint32_t ni = 0;
    for (const Subgroup& n : *subs) {
      if (!n.is_normal()) continue;
      for (uint32_t p : ctx.opt.primes) {
        if (coprime_only && g->order() % p == 0) continue;
        emit(g, n, ni, p);
      }
      ++ni;
    }
  }
}

void clifford_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  normal_grid(ctx, true, [&](const GroupPtr& g, const Subgroup& n, uint32_t ni, uint32_t p) {
    const std::string base = "clifford(" + g->name() + ",n" + std::to_string(ni) + ",p" +
                             std::to_string(p) + ")";
    jobs.push_back({base, "stage1", [&ctx, g, n, p, base] {
                      std::vector<ReportEntry> out;
                      auto irr = ctx.irreducibles(g, ctx.group_key(g, p), p);
                      for (uint32_t k = 0; k < irr->size(); ++k) {
                        const std::string id =
                            base.substr(0, base.size() - 1) + ",V" + std::to_string(k) + ")";
                        out.push_back(checked(id, "stage1", ctx.opt.timing, [&] {
                          auto rng = rng_for(ctx.opt.seed, id);
                          const Stage1Report st = verify_stage1((*irr)[k], n, rng);
                          return std::pair(st.all(),
                                           std::to_string(st.parts.size()) +
                                               " homogeneous parts, inertia order " +
                                               std::to_string(st.t.order()) +
                                               ", re-induction recovers the module");
                        }));
                      }
                      return out;
                    }});
    jobs.push_back({base, "stage2", [&ctx, g, n, p, base] {
                      std::vector<ReportEntry> out;
                      auto irr_n = ctx.irreducibles(n.group(), ctx.sub_key(g, n, p), p);
                      for (uint32_t wk = 0; wk < irr_n->size(); ++wk) {
                        const Representation& w = (*irr_n)[wk];
                        auto rng = rng_for(ctx.opt.seed, base + "/W" + std::to_string(wk));
                        const Subgroup t = inertia_group(w, n, rng).t;
                        const Subgroup nt = subgroup_within(t, n);
                        auto irr_t = ctx.irreducibles(t.group(), ctx.sub_key(g, t, p), p);
                        for (uint32_t sj = 0; sj < irr_t->size(); ++sj) {
                          if (!lies_over((*irr_t)[sj], w, nt, rng)) continue;
                          const std::string id = base.substr(0, base.size() - 1) + ",W" +
                                                 std::to_string(wk) + ",S" + std::to_string(sj) +
                                                 ")";
                          out.push_back(checked(id, "stage2", ctx.opt.timing, [&] {
                            auto rng2 = rng_for(ctx.opt.seed, id);
                            const Stage2Report st = verify_stage2((*irr_t)[sj], t, w, n, rng2);
                            return std::pair(st.ok(), "inertia order " + std::to_string(t.order()) +
                                                          ", induced module irreducible");
                          }));
                        }
                      }
                      return out;
                    }});
  });
}

void correspondence_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  normal_grid(ctx, true, [&](const GroupPtr& g, const Subgroup& n, uint32_t ni, uint32_t p) {
    const std::string base = "correspondence(" + g->name() + ",n" + std::to_string(ni) + ",p" +
                             std::to_string(p) + ")";
    jobs.push_back({base, "round-trip", [&ctx, g, n, p, base] {
                      std::vector<ReportEntry> out;
                      auto irr_n = ctx.irreducibles(n.group(), ctx.sub_key(g, n, p), p);
                      for (uint32_t wk = 0; wk < irr_n->size(); ++wk) {
                        const std::string id = base.substr(0, base.size() - 1) + ",W" +
                                               std::to_string(wk) + ")";
                        out.push_back(checked(id, "round-trip", ctx.opt.timing, [&] {
                          auto rng = rng_for(ctx.opt.seed, id);
                          const CorrespondenceReport cr =
                              verify_correspondence((*irr_n)[wk], n, rng);
                          return std::pair(cr.round_trip_ok,
                                           std::to_string(cr.over_t.size()) +
                                               " classes over the inertia group, " +
                                               std::to_string(cr.over_g.size()) +
                                               " over the full group");
                        }));
                      }
                      return out;
                    }});
  });

  const bool has_s3 = ctx.opt.max_order >= 6;
  const bool has_p7 =
      std::find(ctx.opt.primes.begin(), ctx.opt.primes.end(), 7u) != ctx.opt.primes.end();
  if (has_s3 && has_p7) {
    jobs.push_back(
        {"correspondence(S3-characters)", "character-classes", [&ctx] {
           std::vector<ReportEntry> out;
           const GroupPtr g = catalog_group("S3", 6);
           uint32_t r = 0;
           for (uint32_t a = 1; a < g->order(); ++a)
             if (g->element_order(a) == 3) {
               r = a;
               break;
             }
           const Subgroup a3 = subgroup_generated(g, {r});
           auto rng = rng_for(ctx.opt.seed, "correspondence(S3-characters)");
           const auto chars = enumerate_irreducibles(a3.group(), PrimeField{7}, rng);
           for (uint32_t k = 0; k < chars.size(); ++k) {
             const Representation& w = chars[k];
             bool trivial = true;
             for (uint32_t s = 0; s < a3.order() && trivial; ++s)
               trivial = w.image(s).at(0, 0) == 1;
             if (w.dim() != 1 || trivial) continue;
             const std::string id = "correspondence(S3-characters,W" + std::to_string(k) + ")";
             out.push_back(checked(id, "character-classes", ctx.opt.timing, [&] {
               auto rng2 = rng_for(ctx.opt.seed, id);
               const CorrespondenceReport cr = verify_correspondence(w, a3, rng2);
               const bool ok = cr.round_trip_ok && cr.t.order() == 3 && cr.over_t.size() == 1 &&
                               cr.over_g.size() == 1;
               return std::pair(ok, std::string("one class on each side, inertia stays at the "
                                                "normal subgroup"));
             }));
           }
           return out;
         }});
  }

  const bool has_p3 =
      std::find(ctx.opt.primes.begin(), ctx.opt.primes.end(), 3u) != ctx.opt.primes.end();
  if (ctx.opt.max_order >= 4 && has_p3) {
    jobs.push_back({"correspondence(radical(3,2,2))", "degenerate-inertia", [&ctx] {
                      std::vector<ReportEntry> out;
                      out.push_back(checked("correspondence(radical(3,2,2))", "degenerate-inertia",
                                            ctx.opt.timing, [&] {
                                              const Scenario sc = build_radical_example(3, 2, 2);
                                              auto rng = rng_for(ctx.opt.seed,
                                                                 "correspondence(radical(3,2,2))");
                                              const CorrespondenceReport cr = verify_correspondence(
                                                  sc.module_w, sc.normal_sub, rng);
                                              const bool ok =
                                                  cr.round_trip_ok &&
                                                  cr.t.order() == sc.group->order() &&
                                                  cr.over_t.size() == cr.over_g.size();
                                              return std::pair(
                                                  ok,
                                                  "inertia group is the whole group; both sides "
                                                  "carry " +
                                                      std::to_string(cr.over_g.size()) +
                                                      " classes");
                                            }));
                      return out;
                    }});
  }
}

void glue_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  normal_grid(ctx, true, [&](const GroupPtr& g, const Subgroup& n, uint32_t ni, uint32_t p) {
    const std::string base =
        "glue(" + g->name() + ",n" + std::to_string(ni) + ",p" + std::to_string(p) + ")";
    jobs.push_back({base, "classification", [&ctx, g, n, p, base] {
                      std::vector<ReportEntry> out;
                      auto irr_n = ctx.irreducibles(n.group(), ctx.sub_key(g, n, p), p);
                      for (uint32_t wk = 0; wk < irr_n->size(); ++wk) {
                        const Representation& w = (*irr_n)[wk];
                        if (end_ring(module_of(w)).size() != 1) continue;
                        auto rng = rng_for(ctx.opt.seed, base + "/W" + std::to_string(wk));
                        if (inertia_group(w, n, rng).t.order() != g->order()) continue;
                        const std::string id = base.substr(0, base.size() - 1) + ",W" +
                                               std::to_string(wk) + ")";
                        out.push_back(checked(id, "classification", ctx.opt.timing, [&] {
                          auto rng2 = rng_for(ctx.opt.seed, id);
                          const GlueReport gr = verify_glue(w, n, rng2);
                          std::vector<uint32_t> dims;
                          for (const auto& y : gr.glued) dims.push_back(y.dim());
                          return std::pair(gr.ok(), std::to_string(gr.glued.size()) +
                                                        " glued modules of dims " +
                                                        joined_dims(dims) +
                                                        " classify everything over the module");
                        }));
                      }
                      return out;
                    }});
  });

  const bool has_p3 =
      std::find(ctx.opt.primes.begin(), ctx.opt.primes.end(), 3u) != ctx.opt.primes.end();
  if (ctx.opt.max_order >= 4 && has_p3) {
    jobs.push_back(
        {"glue(radical(3,2,2))", "reconstruction", [&ctx] {
           std::vector<ReportEntry> out;
           out.push_back(checked("glue(radical(3,2,2))", "reconstruction", ctx.opt.timing, [&] {
             const Scenario sc = build_radical_example(3, 2, 2);
             auto rng = rng_for(ctx.opt.seed, "glue(radical(3,2,2))");
             const GlueReport gr = verify_glue(sc.module_w, sc.normal_sub, rng);
             const Representation ind = induce(sc.module_w, sc.normal_sub);
             bool recovered = false;
             for (const auto& y : gr.glued)
               if (find_isomorphism(module_of(y), module_of(ind), rng)) recovered = true;
             return std::pair(gr.ok() && recovered,
                              "glue path rebuilds the induced module, " +
                                  std::to_string(gr.glued.size()) + " class(es) over the module");
           }));
           return out;
         }});
  }
}

void collapse_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  normal_grid(ctx, false, [&](const GroupPtr& g, const Subgroup& n, uint32_t ni, uint32_t p) {
    const std::string base = "collapse(" + g->name() + ",n" + std::to_string(ni) + ",p" +
                             std::to_string(p) + ")";
    jobs.push_back({base, "collapse", [&ctx, g, n, p, base] {
                      std::vector<ReportEntry> out;
                      auto irr_n = ctx.irreducibles(n.group(), ctx.sub_key(g, n, p), p);
                      for (uint32_t wk = 0; wk < irr_n->size(); ++wk) {
                        auto rng = rng_for(ctx.opt.seed, base + "/W" + std::to_string(wk));
                        const CollapseReport rep =
                            inertia_collapse_conditions((*irr_n)[wk], n, rng);
                        if (!rep.hypothesis_ok) continue;  // induced module not irreducible
                        const std::string id = base.substr(0, base.size() - 1) + ",W" +
                                               std::to_string(wk) + ")";
                        ReportEntry e{id, "collapse", rep.consistent() ? "PASS" : "FAIL",
                                      "a " + cond_word(rep.cond_a) + ", e " +
                                          cond_word(rep.cond_e) + ", f " + cond_word(rep.cond_f) +
                                          (rep.t_equals_n ? "; inertia equals the normal subgroup"
                                                          : "; inertia is larger"),
                                      0};
                        out.push_back(std::move(e));
                      }
                      return out;
                    }});
  });
}

// --------------------------------------------------------------------------
// factor

void factor_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  if (ctx.groups.empty()) return;
  for (uint32_t k = 0; k < 200; ++k) {
    const std::string id = "factor-" + std::to_string(k);
    jobs.push_back({id, "factor", [&ctx, id] {
                      std::vector<ReportEntry> out;
                      out.push_back(checked(id, "factor", ctx.opt.timing, [&] {
                        auto rng = rng_for(ctx.opt.seed, id);
                        const GroupPtr g = ctx.groups[rng() % ctx.groups.size()];
                        const uint32_t p = ctx.opt.primes[rng() % ctx.opt.primes.size()];
                        PrimeField f{p};
                        auto irr = ctx.irreducibles(g, ctx.group_key(g, p), p);
                        std::vector<uint32_t> scalar;
                        for (uint32_t i = 0; i < irr->size(); ++i)
                          if ((*irr)[i].dim() <= 6 && end_ring(module_of((*irr)[i])).size() == 1)
                            scalar.push_back(i);
                        const Representation w = scalar.empty()
                                                     ? trivial_rep(g, f)
                                                     : (*irr)[scalar[rng() % scalar.size()]];
                        const AlgebraModule wm = module_of(w);
                        const uint32_t mult1 = 1 + uint32_t(rng() % 3);
                        const uint32_t mult2 = 1 + uint32_t(rng() % 3);
                        auto widen = [&](uint32_t u) {
                          AlgebraModule m{f, u * w.dim(), {}};
                          const MatrixF eye = MatrixF::identity(f, u);
                          for (const MatrixF& gen : wm.gens)
                            m.gens.push_back(kronecker(eye, gen));
                          return m;
                        };
                        const AlgebraModule a1 = widen(mult1);
                        const AlgebraModule a2 = widen(mult2);
                        const std::vector<MatrixF> homs = hom_basis(a1, a2);
                        if (homs.size() != size_t(mult1) * mult2)
                          return std::pair(false, "hom space dim " + std::to_string(homs.size()) +
                                                      ", expected " + std::to_string(mult1 * mult2));
                        MatrixF t(f, mult2 * w.dim(), mult1 * w.dim());
                        bool zero = true;
                        for (const MatrixF& h : homs) {
                          const uint32_t c = uint32_t(rng() % p);
                          if (c) zero = false;
                          t = t + h.scaled(c);
                        }
                        if (zero) t = homs.front();
                        const MatrixF s = factor_intertwiner(t, mult1, mult2, wm);
                        const bool ok = kronecker(s, MatrixF::identity(f, w.dim())) == t;
                        return std::pair(ok, g->name() + " p=" + std::to_string(p) + " dims " +
                                                 std::to_string(mult1) + "x" + std::to_string(mult2) +
                                                 " over a " + std::to_string(w.dim()) +
                                                 "-dim module, Kronecker factor recovered");
                      }));
                      return out;
                    }});
  }
}

// --------------------------------------------------------------------------
// fixed families: radical, crossed, product

void radical_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  struct Inst {
    uint32_t p, m, a;
  };
  const std::vector<Inst> insts{{3, 2, 2}, {5, 2, 2}, {5, 2, 3}, {7, 3, 3}};
  for (const Inst& in : insts) {
    const std::string id = "radical(p=" + std::to_string(in.p) + ",m=" + std::to_string(in.m) +
                           ",a=" + std::to_string(in.a) + ")";
    jobs.push_back({id, "scenario", [&ctx, in, id] {
                      Scenario sc = build_radical_example(in.p, in.m, in.a);
                      std::vector<ReportEntry> out = run_scenario(sc, ctx.opt.seed, ctx.opt.timing);
                      out.push_back(checked(sc.id, "no-collapse", ctx.opt.timing, [&] {
                        auto rng = rng_for(ctx.opt.seed, sc.id + "/no-collapse");
                        const CollapseReport rep =
                            inertia_collapse_conditions(sc.module_w, sc.normal_sub, rng);
                        const bool ok = rep.hypothesis_ok && rep.cond_a != CondStatus::Holds &&
                                        rep.cond_e != CondStatus::Holds &&
                                        rep.cond_f != CondStatus::Holds && !rep.t_equals_n;
                        return std::pair(ok, "a " + cond_word(rep.cond_a) + ", e " +
                                                 cond_word(rep.cond_e) + ", f " +
                                                 cond_word(rep.cond_f) +
                                                 "; inertia exceeds the normal subgroup");
                      }));
                      return out;
                    }});
  }
}

void crossed_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  struct Inst {
    uint32_t p, r, s;
    std::vector<uint32_t> f;
  };
  const std::vector<Inst> insts{{3, 2, 1, {}}, {2, 2, 1, {}},          {5, 2, 1, {}},
                                {2, 3, 1, {}}, {3, 2, 0, {}},          {3, 2, 1, {1, 1, 1, 2}}};
  for (const Inst& in : insts) {
    std::string id = "crossed(p=" + std::to_string(in.p) + ",r=" + std::to_string(in.r) +
                     ",s=" + std::to_string(in.s) + ")";
    jobs.push_back({id, "scenario", [&ctx, in] {
                      const Scenario sc = build_crossed_product(in.p, in.r, in.s, in.f);
                      return run_scenario(sc, ctx.opt.seed, ctx.opt.timing);
                    }});
  }
}

void product_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"C2", "C2"}, {"S3", "C2"}, {"S3", "C3"}, {"C4", "C2"}};
  for (const auto& [n1, n2] : pairs) {
    const std::string id = "product(" + n1 + "," + n2 + ",p7)";
    jobs.push_back({id, "product", [&ctx, n1, n2, id] {
                      std::vector<ReportEntry> out;
                      out.push_back(checked(id, "product", ctx.opt.timing, [&] {
                        const GroupPtr g1 = catalog_group(n1, 6);
                        const GroupPtr g2 = catalog_group(n2, 6);
                        auto rng = rng_for(ctx.opt.seed, id);
                        const ProductReport pr =
                            verify_direct_product(g1, g2, PrimeField{7}, rng);
                        const bool ok = pr.ok() && pr.outer_dims == pr.product_dims;
                        return std::pair(ok, std::to_string(pr.product_class_count) +
                                                 " classes, dims " +
                                                 joined_dims(pr.product_dims));
                      }));
                      return out;
                    }});
  }
}

// --------------------------------------------------------------------------
// frobenius

void frobenius_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  for (const GroupPtr& g : ctx.groups) {
    auto subs = ctx.subgroups(g);
    for (uint32_t hi = 0; hi < subs->size(); ++hi)
      for (uint32_t p : ctx.opt.primes) {
        const std::string base = "frobenius(" + g->name() + ",h" + std::to_string(hi) + ",p" +
                                 std::to_string(p) + ")";
        jobs.push_back({base, "reciprocity", [&ctx, g, subs, hi, p, base] {
                          std::vector<ReportEntry> out;
                          const Subgroup& h = (*subs)[hi];
                          auto irr_h = ctx.irreducibles(h.group(), ctx.sub_key(g, h, p), p);
                          auto irr_g = ctx.irreducibles(g, ctx.group_key(g, p), p);
                          for (uint32_t wk = 0; wk < irr_h->size(); ++wk) {
                            const Representation& w = (*irr_h)[wk];
                            const std::string stem = base.substr(0, base.size() - 1) + ",W" +
                                                     std::to_string(wk);
                            out.push_back(checked(stem + ",ind)", "reciprocity", ctx.opt.timing,
                                                  [&] {
                                                    const Representation v = induce(w, h);
                                                    const FrobeniusReport fr =
                                                        verify_frobenius(w, h, v);
                                                    return std::pair(
                                                        fr.ok(),
                                                        "hom dims " +
                                                            std::to_string(fr.hom_res_dim) +
                                                            " = " +
                                                            std::to_string(fr.hom_ind_dim));
                                                  }));
                            for (uint32_t vj = 0; vj < irr_g->size(); ++vj)
                              out.push_back(checked(stem + ",V" + std::to_string(vj) + ")",
                                                    "reciprocity", ctx.opt.timing, [&] {
                                                      const FrobeniusReport fr = verify_frobenius(
                                                          w, h, (*irr_g)[vj]);
                                                      return std::pair(
                                                          fr.ok(),
                                                          "hom dims " +
                                                              std::to_string(fr.hom_res_dim) +
                                                              " = " +
                                                              std::to_string(fr.hom_ind_dim));
                                                    }));
                          }
                          return out;
                        }});
      }
  }
}

// --------------------------------------------------------------------------
// kernel oracles

// hom space by brute force: one linear condition per group element, solved
// over the full matrix of unknowns. Agreement is span equality, decided by
// ranks of the stacked flattened bases.
std::vector<MatrixF> brute_hom(const Representation& a, const Representation& b) {
  const PrimeField f = a.field();
  const uint32_t da = a.dim(), db = b.dim();
  const uint32_t unknowns = da * db;
  const uint32_t order = a.group()->order();
  MatrixF sys(f, order * da * db, unknowns);
  uint32_t row = 0;
  for (uint32_t x = 0; x < order; ++x) {
    const MatrixF ax = a.image(x);
    const MatrixF bx = b.image(x);
    for (uint32_t i = 0; i < db; ++i)
      for (uint32_t j = 0; j < da; ++j, ++row)
        for (uint32_t k = 0; k < db; ++k)
          for (uint32_t l = 0; l < da; ++l) {
            uint32_t c = 0;
            if (k == i) c = ax.at(l, j);
            if (l == j) c = f.sub(c, bx.at(i, k));
            if (c) sys.set(row, k * da + l, c);
          }
  }
  std::vector<MatrixF> out;
  const MatrixF ns = nullspace_basis(sys);
  for (uint32_t c = 0; c < ns.cols(); ++c) {
    MatrixF t(f, db, da);
    for (uint32_t k = 0; k < db; ++k)
      for (uint32_t l = 0; l < da; ++l) t.set(k, l, ns.at(k * da + l, c));
    out.push_back(std::move(t));
  }
  return out;
}

bool same_span(const PrimeField& f, const std::vector<MatrixF>& a, const std::vector<MatrixF>& b,
               uint32_t rows, uint32_t cols) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  MatrixF stacked(f, uint32_t(a.size() + b.size()), rows * cols);
  uint32_t r = 0;
  for (const auto* list : {&a, &b})
    for (const MatrixF& m : *list) {
      for (uint32_t i = 0; i < rows; ++i)
        for (uint32_t j = 0; j < cols; ++j) stacked.set(r, i * cols + j, m.at(i, j));
      ++r;
    }
  return rank(stacked) == uint32_t(a.size());
}

// every mu: G -> F^* with mu(e) = 1, tested against d(mu) = a
bool exhaustive_coboundary(const FactorSet& a) {
  const GroupPtr& g = a.group();
  const PrimeField f = a.field();
  const uint32_t n = g->order();
  const uint32_t p = f.modulus();
  std::vector<uint32_t> mu(n, 1);
  for (;;) {
    bool match = true;
    for (uint32_t x = 0; x < n && match; ++x)
      for (uint32_t y = 0; y < n && match; ++y)
        match = f.mul(f.mul(mu[x], mu[y]), f.inv(mu[g->mul(x, y)])) == a.at(x, y);
    if (match) return true;
    uint32_t i = 1;
    while (i < n) {
      ++mu[i];
      if (mu[i] < p) break;
      mu[i] = 1;
      ++i;
    }
    if (i == n) return false;
  }
}

bool standard_cyclic(const GroupPtr& g) {
  for (uint32_t i = 0; i < g->order(); ++i)
    for (uint32_t j = 0; j < g->order(); ++j)
      if (g->mul(i, j) != (i + j) % g->order()) return false;
  return true;
}

void kernel_jobs(const Ctx& ctx, std::vector<Job>& jobs) {
  const std::vector<GroupPtr> small = catalog(6);

  for (uint32_t k = 0; k < 50; ++k) {
    const std::string id = "kernel-hom" + std::to_string(k);
    jobs.push_back({id, "hom-oracle", [&ctx, small, id] {
                      std::vector<ReportEntry> out;
                      out.push_back(checked(id, "hom-oracle", ctx.opt.timing, [&] {
                        auto rng = rng_for(ctx.opt.seed, id);
                        const GroupPtr g = small[rng() % small.size()];
                        const uint32_t p = ctx.opt.primes.empty()
                                               ? 3
                                               : ctx.opt.primes[rng() % ctx.opt.primes.size()];
                        PrimeField f{p};
                        auto irr = ctx.irreducibles(g, ctx.group_key(g, p), p);
                        auto pick = [&](std::mt19937_64& r) -> Representation {
                          const uint32_t d = uint32_t(r() % (2 + irr->size()));
                          if (d == 0) return trivial_rep(g, f);
                          if (d == 1) return regular_rep(g, f);
                          return (*irr)[d - 2];
                        };
                        Representation a = pick(rng);
                        Representation b = pick(rng);
                        for (uint32_t tries = 0; a.dim() * b.dim() > 64 && tries < 20; ++tries) {
                          a = pick(rng);
                          b = pick(rng);
                        }
                        if (a.dim() * b.dim() > 64) {
                          a = trivial_rep(g, f);
                          b = trivial_rep(g, f);
                        }
                        const std::vector<MatrixF> slow = brute_hom(a, b);
                        const std::vector<MatrixF> fast = hom_basis(module_of(a), module_of(b));
                        const bool ok = same_span(f, slow, fast, b.dim(), a.dim());
                        return std::pair(ok, g->name() + " p=" + std::to_string(p) + ", dims " +
                                                 std::to_string(a.dim()) + "x" +
                                                 std::to_string(b.dim()) + ", hom dim " +
                                                 std::to_string(fast.size()));
                      }));
                      return out;
                    }});
  }

  for (const GroupPtr& g : small)
    for (uint32_t p : {3u, 5u}) {
      const std::string base = "kernel-cob(" + g->name() + ",p" + std::to_string(p) + ")";
      jobs.push_back({base, "coboundary-oracle", [g, p, base, &ctx] {
                        std::vector<ReportEntry> out;
                        PrimeField f{p};
                        auto agree = [&](const std::string& id, const FactorSet& a) {
                          out.push_back(checked(id, "coboundary-oracle", ctx.opt.timing, [&] {
                            const bool fast = is_coboundary(a);
                            const bool slow = exhaustive_coboundary(a);
                            return std::pair(fast == slow,
                                             std::string(fast ? "coboundary" : "not a coboundary") +
                                                 ", both sides agree");
                          }));
                        };
                        for (uint32_t i = 0; i < 5; ++i) {
                          const std::string id =
                              base.substr(0, base.size() - 1) + ",random" + std::to_string(i) + ")";
                          auto rng = rng_for(ctx.opt.seed, id);
                          std::vector<uint32_t> mu(g->order(), 1);
                          for (uint32_t e = 1; e < g->order(); ++e)
                            mu[e] = 1 + uint32_t(rng() % (p - 1));
                          agree(id, coboundary_of(g, f, mu));
                        }
                        if (standard_cyclic(g) && g->order() > 1)
                          for (uint32_t c = 2; c < std::min(p, 4u); ++c)
                            agree(base.substr(0, base.size() - 1) + ",carry" + std::to_string(c) +
                                      ")",
                                  cyclic_carry_cocycle(g, f, c));
                        for (const Subgroup& n : normal_subgroups(g)) {
                          if (n.order() == 1 || n.order() == g->order()) continue;
                          const Quotient q = quotient_group(g, n);
                          if (!standard_cyclic(q.group)) continue;
                          agree(base.substr(0, base.size() - 1) + ",inflated)",
                                inflate_factor_set(cyclic_carry_cocycle(q.group, f, 2), g, q));
                          break;
                        }
                        return out;
                      }});
    }

  for (uint32_t p : {2u, 3u, 5u, 7u})
    for (uint32_t deg = 1; deg <= 4; ++deg) {
      const std::string id = "kernel-poly(p" + std::to_string(p) + ",d" + std::to_string(deg) +
                             ")";
      jobs.push_back({id, "poly-oracle", [p, deg, id, &ctx] {
                        std::vector<ReportEntry> out;
                        out.push_back(checked(id, "poly-oracle", ctx.opt.timing, [&] {
                          PrimeField f{p};
                          uint32_t count = 1;
                          for (uint32_t i = 0; i < deg; ++i) count *= p;
                          auto poly_at = [&](uint32_t v, uint32_t d) {
                            std::vector<uint32_t> c(d + 1, 0);
                            for (uint32_t i = 0; i < d; ++i) {
                              c[i] = v % p;
                              v /= p;
                            }
                            c[d] = 1;
                            return Polynomial(f, c);
                          };
                          uint32_t checked_n = 0, mismatches = 0;
                          for (uint32_t v = 0; v < count; ++v) {
                            const Polynomial q = poly_at(v, deg);
                            bool divisible = false;
                            for (uint32_t d = 1; d <= deg / 2 && !divisible; ++d) {
                              uint32_t dcount = 1;
                              for (uint32_t i = 0; i < d; ++i) dcount *= p;
                              for (uint32_t w = 0; w < dcount && !divisible; ++w)
                                divisible = poly_mod(q, poly_at(w, d)).is_zero();
                            }
                            const bool slow = !divisible;
                            if (poly_is_irreducible(q) != slow) ++mismatches;
                            ++checked_n;
                          }
                          return std::pair(mismatches == 0, std::to_string(checked_n) +
                                                                " monic polynomials checked");
                        }));
                        return out;
                      }});
    }
}

// --------------------------------------------------------------------------
// orchestration

std::vector<ReportEntry> run_jobs(std::vector<Job>& jobs, uint32_t nthreads) {
  std::vector<std::vector<ReportEntry>> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i].fn();
      } catch (const std::exception& ex) {
        results[i] = {{jobs[i].scenario, jobs[i].claim, "FAIL",
                       std::string("error: ") + ex.what(), 0}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (uint32_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<ReportEntry> out;
  for (auto& r : results)
    for (auto& e : r) out.push_back(std::move(e));
  return out;
}

using JobBuilder = void (*)(const Ctx&, std::vector<Job>&);

const std::vector<std::pair<std::string, JobBuilder>>& suite_table() {
  static const std::vector<std::pair<std::string, JobBuilder>> table{
      {"mackey", mackey_jobs},       {"clifford", clifford_jobs},
      {"correspondence", correspondence_jobs}, {"glue", glue_jobs},
      {"factor", factor_jobs},       {"radical", radical_jobs},
      {"collapse", collapse_jobs},   {"frobenius", frobenius_jobs},
      {"product", product_jobs},     {"kernel", kernel_jobs},
      {"crossed", crossed_jobs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

Report run_suite(const std::string& suite_id, const SuiteOptions& opt) {
  if (opt.primes.empty()) throw std::invalid_argument("run_suite: no primes given");
  SuiteOptions checked_opt = opt;
  std::sort(checked_opt.primes.begin(), checked_opt.primes.end());
  checked_opt.primes.erase(
      std::unique(checked_opt.primes.begin(), checked_opt.primes.end()),
      checked_opt.primes.end());
  for (uint32_t p : checked_opt.primes)
    if (!is_prime_u32(p))
      throw std::invalid_argument("run_suite: " + std::to_string(p) + " is not prime");

  std::vector<JobBuilder> builders;
  if (suite_id == "all") {
    for (const auto& [name, fn] : suite_table()) builders.push_back(fn);
  } else {
    for (const auto& [name, fn] : suite_table())
      if (name == suite_id) builders.push_back(fn);
    if (builders.empty()) {
      std::string known;
      for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("run_suite: unknown suite '" + suite_id + "' (known: " + known +
                                  ")");
    }
  }

  Ctx ctx{checked_opt, catalog(checked_opt.max_order), {}, {}, {}};
  std::vector<Job> jobs;
  for (JobBuilder b : builders) b(ctx, jobs);
  Report rep;
  rep.entries = run_jobs(jobs, std::max(1u, checked_opt.jobs));
  return rep;
}

std::string catalog_text(uint32_t max_order) {
  std::string out;
  for (const GroupPtr& g : catalog(max_order))
    out += g->name() + " " + std::to_string(g->order()) + "\n";
  return out;
}

}  // namespace cforge
