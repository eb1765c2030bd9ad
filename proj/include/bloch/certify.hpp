/*
   Copyright 2026 The blochcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BLOCH_CERTIFY_HPP
#define BLOCH_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bloch/reduce.hpp"

namespace bloch {

// --- Trichotomy evidence ----------------------------------------------------

/// Case 1: lambda-linear factors exist iff gcd(r, s) is nonconstant.
struct Case1Evidence {
    bool excluded = false;
    QPoly gcd;  // monic gcd(r, s); degree >= 1 iff a linear factor exists

    bool operator==(const Case1Evidence&) const = default;
};

/// Case 2, one orbit length l: either an exclusion reason or a candidate
/// factorization over Q[g]/(g^l - lc(s)^2).
struct Case2Record {
    int l = 0;
    bool excluded = false;
    std::string reason;         // set when excluded
    QPoly q0;                   // monic l-th root of the monic part of s
    std::vector<QPoly> R_g;     // candidate R coefficients, lifted to Q[g]
    std::vector<QPoly> residual_g;  // leftover coefficient equations in g
    QPoly gcd_g;                // gcd of {g^l - lc(s)^2} and the residuals

    bool operator==(const Case2Record&) const = default;
};

struct Case2Evidence {
    bool skipped = false;   // case 1 produced a factor; deciders not run
    bool excluded = false;
    std::vector<Case2Record> per_l;

    bool operator==(const Case2Evidence&) const = default;
};

/// Case 3, one divisor l of a: paired two-term factors demand that
/// f+- = r +- 2(-1)^{l+1} s are both perfect squares over C.
struct Case3Record {
    int l = 0;
    bool excluded = false;
    std::string reason;
    Rational c;           // common square scalar, (-1)^n on success
    QPoly w_plus, w_minus;  // f+ = c w+^2, f- = c w-^2
    QPoly A2, B2;           // w+ + w- and w+ - w- (2A/delta, 2B/delta)

    bool operator==(const Case3Record&) const = default;
};

struct Case3Evidence {
    bool skipped = false;
    bool excluded = false;
    bool fast_path = false;  // r+2s and r-2s both squarefree: excludes every l
    std::vector<Case3Record> per_l;

    bool operator==(const Case3Evidence&) const = default;
};

struct CaseEvidence {
    Case1Evidence case1;
    Case2Evidence case2;
    Case3Evidence case3;

    bool all_excluded() const { return case1.excluded && case2.excluded && case3.excluded; }
    bool operator==(const CaseEvidence&) const = default;
};

Case1Evidence case1_decide(const QPoly& r, const QPoly& s);
std::vector<int> admissible_case2_ls(int a, int n, int deg_s);
Case2Evidence case2_decide(const QPoly& r, const QPoly& s, int a);
Case3Evidence case3_decide(const QPoly& r, const QPoly& s, int a);

// --- Verdicts and certificates ----------------------------------------------

enum class VerdictKind { GenericallyIrreducible, AlwaysReducible, AlwaysIrreducible, Inconclusive };
enum class ReducibleReason { None, BlockDecomposition, ZIndependent };

std::string verdict_name(VerdictKind v);
std::string reducible_reason_name(ReducibleReason r);

struct SamplerOptions {
    std::uint64_t seed = 1;
    int max_attempts = 8;

    bool operator==(const SamplerOptions&) const = default;
};

struct AttemptRecord {
    int attempt = 0;
    Assignment assignment;
    ReducedDispersion reduced;
    CaseEvidence evidence;
    bool certified = false;

    bool operator==(const AttemptRecord&) const = default;
};

struct Certificate {
    PeriodicGraph graph;
    StructuralClass structure;
    SamplerOptions sampler;
    VerdictKind verdict = VerdictKind::Inconclusive;
    ReducibleReason reducible_reason = ReducibleReason::None;
    // Populated only for eligible graphs:
    ReductionPlan plan;
    std::vector<AttemptRecord> attempts;
    int witness_attempt = -1;

    bool operator==(const Certificate&) const = default;
};

/// Deterministic witness: free kept weights 1, zeroed edges 0, free
/// potentials i*G + jitter with the Gershgorin gap G from the kept weights.
Assignment sample_witness(const PeriodicGraph& g, const ReductionPlan& plan, std::uint64_t seed,
                          int attempt);

/// The gap constant: G = 4*ceil(max row sum of kept |weights|) + 1.
long gershgorin_gap(const PeriodicGraph& g, const ReductionPlan& plan, const Assignment& weights_only);

CaseEvidence decide_trichotomy(const ReducedDispersion& rd);

Certificate certify_graph(const PeriodicGraph& g, const SamplerOptions& opt);

/// Recompute everything from the recorded graph echo and sampler; true iff
/// the certificate reproduces bit-exactly.
bool verify_certificate(const Certificate& cert);

/// True iff D(1, lambda) is squarefree (all band functions simple at z = 1).
bool multiplicity_one_check(const PeriodicGraph& g, const Assignment& asg);

}  // namespace bloch

#endif
