#ifndef EGR_HARNESS_HPP
#define EGR_HARNESS_HPP

#include <memory>
#include <string>
#include <vector>

#include "egr/graph.hpp"
#include "egr/lattice.hpp"
#include "egr/ring.hpp"
#include "egr/solvers.hpp"

namespace egr {

enum class Verdict { Pass, Fail, VacuousHypothesis };

std::string to_string(Verdict v);

struct VerificationResult {
    std::string theorem_id;
    std::string ring_spec;
    bool hypothesis_satisfied = false;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::VacuousHypothesis;
    std::string counterexample;   // present whenever verdict == Fail
    std::string note;             // metadata (open-question flags, reading choices)
};

/// A ring together with its ideal lattice and essential annihilating-ideal graph.
struct RingContext {
    std::shared_ptr<FiniteRing> ring;
    std::shared_ptr<IdealLattice> lattice;
    EGGraph eg;
};

RingContext analyze_ring(const std::string& spec_text, long order_cap = kDefaultOrderCap);
RingContext analyze_ring(const RingSpec& spec, long order_cap = kDefaultOrderCap);

// per-theorem checkers
VerificationResult verify_lemma_nilpotent_in_nilradical(const RingContext& ctx);   // lemma2.1
VerificationResult verify_lemma_essential_annihilator(const RingContext& ctx);     // lemma2.2
VerificationResult verify_clique_chromatic_formula(const RingContext& ctx);        // thm2.3
VerificationResult verify_zn_formula(long n);                                      // ex2.4
VerificationResult verify_completeness_classification(const RingContext& ctx);     // thm2.5
VerificationResult verify_bipartite_classification(const RingContext& ctx);        // fital
VerificationResult verify_twin_free_formula(const RingContext& ctx);               // thm2.9
VerificationResult verify_field_product_class1(const std::vector<long>& field_orders);
VerificationResult verify_field_product_class1(const RingContext& ctx);            // thm2.12
VerificationResult verify_two_factor_class(const RingContext& ctx);                // final
VerificationResult verify_threshold_table();                                       // thm2.13

/// Smallest n >= 2 with (t+1)^n - 2 t^n - t^{n-1} + 1 > 0; exact big integers.
/// t must be even and >= 2.
long threshold_n_for_t(long t);

/// All known checker tags, in suite order.
std::vector<std::string> all_theorem_tags();

/// Built-in corpus of finite rings used for acceptance runs.
std::vector<std::string> default_corpus();

/// Parse a corpus file body: one spec per line, '#' comments, blank lines ignored.
std::vector<std::string> parse_corpus(const std::string& body);

/// Runs every selected checker on every corpus ring. Hypothesis failures yield
/// VacuousHypothesis records; per-ring construction errors yield Fail records
/// with theorem_id "construction" and do not abort the suite.
std::vector<VerificationResult> run_suite(const std::vector<std::string>& corpus,
                                          const std::vector<std::string>& tags = {},
                                          long order_cap = kDefaultOrderCap);

} // namespace egr

#endif
