#pragma once

// Fast predicates against their brute-force definitions over enumerated
// lattices, for artinian algebras over a prime field.

#include <string>
#include <utility>
#include <vector>

#include "spectra/artinian.hpp"
#include "spectra/goldie.hpp"
#include "spectra/oracle.hpp"

namespace spectra {

struct PredicateTally {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> disagreements;
};

struct OracleComparison {
  std::string algebra;
  std::vector<PredicateTally> tallies;
  std::size_t modules = 0;

  std::size_t disagreement_count() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.disagreements.size();
    return n;
  }
  std::size_t checked() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.checked;
    return n;
  }
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Compares every fast predicate with its oracle on the regular module, the
/// simples, their envelopes and `extra`.  With `exhaustive`, every right
/// ideal and every cyclic quotient A/I of small dimension is added too.
inline OracleComparison compare_with_oracle(const ArtinianBackend<Zp>& b,
                                            const std::vector<std::pair<std::string, RightModule<Zp>>>& extra,
                                            bool exhaustive, Index max_module_dim = 4,
                                            const EnumerationBudget& budget = EnumerationBudget::from_env()) {
  const auto& a = b.algebra();
  OracleComparison out;
  out.algebra = b.name();
  enum { Prime, Monoform, Compressible, PrimeObject, Essential, Singular, Mass, EssComp, Count };
  const char* names[] = {"is_prime",  "is_monoform",        "is_compressible", "is_prime_object",
                         "is_essential", "singular_subobject", "mass",            "is_essentially_compressible"};
  for (int i = 0; i < Count; ++i) out.tallies.push_back({names[i], 0, {}});
  auto record = [&](int which, const std::string& what, bool agree) {
    auto& t = out.tallies[static_cast<std::size_t>(which)];
    ++t.checked;
    if (!agree) t.disagreements.push_back(what);
  };

  const auto ideals = enumerate_two_sided_ideals(a, budget);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].space().dim() == a->dim()) continue;  // primes are proper
    const bool fast = is_prime(ideals[i]);
    const bool slow = oracle::is_prime(ideals[i], ideals);
    record(Prime, "ideal " + describe(ideals[i]) + ": fast " + detail::yes_no(fast) + ", oracle " + detail::yes_no(slow),
           fast == slow);
  }

  std::vector<std::pair<std::string, RightModule<Zp>>> modules;
  modules.emplace_back("A_A", RightModule<Zp>::regular(a));
  for (const auto& s : b.simples()) {
    modules.emplace_back(s.label, s.representative);
    modules.emplace_back("E(" + s.label + ")", b.envelope(s.representative).module);
  }
  for (const auto& m : extra) modules.push_back(m);
  if (exhaustive) {
    const auto reg = RightModule<Zp>::regular(a);
    for (const auto& r : enumerate_right_ideals(a, budget)) {
      if (r.is_zero()) continue;
      const std::string label = describe_span(*a, r);
      if (r.dim() < a->dim()) modules.emplace_back("I=" + label, restrict_to(reg, r));
      const auto q = quotient_module(reg, r);
      if (q.module.dim() > 0) modules.emplace_back("A/" + label, q.module);
    }
  }

  for (const auto& [label, m] : modules) {
    if (m.dim() == 0 || m.dim() > max_module_dim) continue;
    ++out.modules;
    const std::string tag = out.algebra + " / " + label;
    const auto subs = enumerate_submodules_brute(m, budget);

    const bool mono = is_monoform(m), mono_o = oracle::is_monoform(m);
    record(Monoform, tag + ": fast " + detail::yes_no(mono) + ", oracle " + detail::yes_no(mono_o), mono == mono_o);
    const bool comp = is_compressible(m), comp_o = oracle::is_compressible(m);
    record(Compressible, tag + ": fast " + detail::yes_no(comp) + ", oracle " + detail::yes_no(comp_o), comp == comp_o);
    const bool pr = is_prime_object(m), pr_o = oracle::is_prime_object(m);
    record(PrimeObject, tag + ": fast " + detail::yes_no(pr) + ", oracle " + detail::yes_no(pr_o), pr == pr_o);
    for (const auto& l : subs) {
      const bool e = is_essential(m, l), e_o = oracle::is_essential(m, l);
      record(Essential, tag + " sub " + std::to_string(l.dim()) + "-dim: fast " + detail::yes_no(e), e == e_o);
    }
    record(Singular, tag, singular_space(m) == oracle::singular_space(m));

    std::vector<Subspace<Zp>> fast_mass;
    for (const auto& x : b.mass(m)) fast_mass.push_back(b.prime_of(x).space());
    auto slow_mass = oracle::mass(m);
    bool same = fast_mass.size() == slow_mass.size();
    for (const auto& s : slow_mass) same = same && std::find(fast_mass.begin(), fast_mass.end(), s) != fast_mass.end();
    record(Mass, tag + ": fast " + std::to_string(fast_mass.size()) + " primes, oracle " + std::to_string(slow_mass.size()),
           same);
    const bool ec = is_essentially_compressible(m), ec_o = oracle::is_essentially_compressible(m);
    record(EssComp, tag + ": fast " + detail::yes_no(ec) + ", oracle " + detail::yes_no(ec_o), ec == ec_o);
  }
  return out;
}

}  // namespace spectra
