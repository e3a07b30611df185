#pragma once

// Exhaustive verification kernels.  Each sweep has an OpenMP-parallel path
// and a serial path that must agree on every input; the *_reference
// variants use brute-force routes and exist for tests and benchmarks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mang/bijection.hpp"
#include "mang/dissection.hpp"
#include "mang/dyck.hpp"
#include "mang/flip_poset.hpp"
#include "mang/limits.hpp"

namespace mang {

enum class Exec { Serial, Parallel };

struct SweepResult {
  bool pass = true;
  std::uint64_t checked = 0;
  // The offending object: one dissection, or a (bottom, top) pair.
  std::vector<Dissection> witnesses;
  std::optional<MVector> vector_witness;
  std::string detail;

  static SweepResult fail(std::vector<Dissection> witnesses, std::string detail) {
    SweepResult r;
    r.pass = false;
    r.witnesses = std::move(witnesses);
    r.detail = std::move(detail);
    return r;
  }
};

/// Every interval [a, b]: distributive-lattice certificate, forest of
/// join-irreducibles, Moebius value in {-1,0,1} and equal to (-1)^|J| when J
/// is an antichain (0 otherwise), and the interval_decompose round trip.
SweepResult interval_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel);
/// Same claims through analyze_interval_reference and a per-interval Moebius
/// recursion.  Serial and cubic.
SweepResult interval_sweep_reference(const FinitePoset& poset);

/// Number of intervals, i.e. comparable pairs a <= b.
std::uint64_t interval_count(const FinitePoset& poset);

/// P_Q | P_Q' iff Q <= Q', over every ordered pair, using factor bitmasks.
SweepResult divisibility_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel);
/// Same relation through divides() on every pair.
SweepResult divisibility_sweep_reference(const FinitePoset& poset);
/// Exact long division of expanded polynomials on `pairs` pairs drawn with a
/// fixed seed, half of them comparable; every pair when the poset is small.
SweepResult exact_division_sample(const FinitePoset& poset, std::size_t pairs, std::uint64_t seed = 20240601);

/// psi(phi(Q)) = Q for every Q, phi(psi(v)) = v for every Dyck v, phi
/// injective with image the Dyck set, fan starts strictly between the apex
/// and the end, and the visible-vertex index identity at each fan.
SweepResult bijection_sweep(int m, int n, Exec exec = Exec::Parallel,
                            const Limits& limits = Limits::from_env());

/// Why a psi trace breaks the fan invariants: a start outside (0, end), or
/// a visible-vertex count before the first start other than l - m(v_1+...+v_l).
std::optional<std::string> fan_trace_violation(const MVector& v, const std::vector<FanStep>& trace);

/// {LM(P_Q)} equals {A_v : v Dyck} with no repetition.
SweepResult leading_monomial_sweep(int m, int n, Exec exec = Exec::Parallel,
                                   const Limits& limits = Limits::from_env());

/// Number of M-angulations of each rank 0..n-1.
std::vector<std::uint64_t> rank_census(int m, int n, const Limits& limits = Limits::from_env());

/// The set {P_Q} is closed under the involution, up to sign.
SweepResult involution_sweep(int m, int n, const Limits& limits = Limits::from_env());

/// Unique minimum, consistent grading, cover counts, and a witness descent
/// from every Q to Q0 in rank(Q) steps.
SweepResult poset_structure_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel);

/// Initial intervals [Q0, A] against the product of [Q0, piece] over
/// cut_L(A); initial-final intervals against the product over blocks of
/// [Q0, single_block_final].  Element counts and degree profiles must agree.
SweepResult factorization_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel,
                                const Limits& limits = Limits::from_env());

/// For final Q and every Z <= Q, no chord of apex_diagonal_set_D(Q) lies in
/// or crosses Z.
SweepResult apex_chord_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel);

/// upper_ideal_iso_check for every element.
SweepResult upper_ideal_sweep(const FinitePoset& poset, Exec exec = Exec::Parallel,
                              const Limits& limits = Limits::from_env());

}  // namespace mang
