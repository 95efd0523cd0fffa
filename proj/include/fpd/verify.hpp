#ifndef FPD_VERIFY_HPP
#define FPD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpd/classify.hpp"
#include "fpd/families.hpp"

namespace fpd {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t cutoff = 5;
  std::size_t budget = 4096;
  std::size_t corpus_size = 120;          // randomized algebras for the homology sweeps
  std::size_t groebner_instances = 200;   // membership-oracle instances
  std::size_t kernel_instances = 60;      // module-kernel oracle instances
  bool inject_duality_fault = false;      // negative-path harness
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass;
};

// battery of all checks below, in a fixed order
VerificationReport run_verification_suite(const VerifyOptions& opt);

CheckResult check_named_ring_classifications(const VerifyOptions& opt);
CheckResult check_koszul_duality(const VerifyOptions& opt);
CheckResult check_koszul_endpoints(const VerifyOptions& opt);
CheckResult check_euler_characteristic(const VerifyOptions& opt);
CheckResult check_grade_generator_independence(const VerifyOptions& opt);
CheckResult check_regular_sequence_grades(const VerifyOptions& opt);
CheckResult check_theorem_wnd(const VerifyOptions& opt);
CheckResult check_dw_biconditional(const VerifyOptions& opt);
CheckResult check_fpd_le_selfinjdim(const VerifyOptions& opt);
CheckResult check_ext_oracle_equivalence(const VerifyOptions& opt);
CheckResult check_backend_cross_validation(const VerifyOptions& opt);
CheckResult check_groebner_membership_oracle(const VerifyOptions& opt);
CheckResult check_module_kernel_oracle(const VerifyOptions& opt);
CheckResult check_prufer_suite(const VerifyOptions& opt);
CheckResult check_weak_1d(const VerifyOptions& opt);
CheckResult check_lattice_sanity(const VerifyOptions& opt);

// Brute-force membership oracle: row-reduces the span of all monomial
// multiples m*g with deg(m*g) <= cap and tests f's coefficient vector.
// Pure linear algebra; independent of the division/Buchberger path.
bool capped_span_membership(const PolyRingPtr& ring, const std::vector<Polynomial>& gens,
                            const Polynomial& f, std::size_t cap);

// Brute-force kernel elements of component degree <= deg_cap, found by
// solving the linear system on coefficients. Relations must be given
// by monomials (so that plain division reduces them exactly).
std::vector<ModuleVector> capped_kernel_solve(const PolyMatrix& matrix,
                                              const std::vector<Polynomial>& relations,
                                              std::size_t deg_cap);

}  // namespace fpd

#endif  // FPD_VERIFY_HPP
