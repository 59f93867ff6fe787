#pragma once

// Property audits for loc families of sets: structural laws that every loc
// family must satisfy, re-checked directly from the definitions instead of
// through the construction code. Callers are expected to pass families that
// already passed is_loc_setfamily; the laws are vacuous or meaningless
// otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include "latrep/set_family.hpp"

namespace latrep {

struct audit_failure {
    std::string law;           // which law was violated
    std::vector<int> witness;  // member or point indices, law-specific
};

struct audit_report {
    std::uint64_t checks = 0;  // non-vacuous law instances evaluated
    std::vector<audit_failure> failures;

    bool ok() const { return failures.empty(); }
    audit_report& merge(audit_report other);
};

// Laws about members and joins:
//   join-cover-uniqueness:     pairwise incomparable nonempty A, B, C admit
//                              at most one of A<=BvC, B<=AvC, C<=AvB
//   disjoint-join-absorption:  pairwise disjoint A, B, C where B meets AvC
//                              satisfy B <= AvC
//   join-surplus:              A and B both meeting C implies (AvB)\(AuB) <= C
//   crossing-intersection:     C meeting both A\B and B\A implies AnB <= C
audit_report audit_member_laws(const set_family& F);

// Laws about the induced betweenness:
//   betweenness-totality:      for any three distinct points one of them
//                              lies between the other two
//   representative-match:      for pairwise completely separated a, b, c and
//                              EVERY representative triple (A, B, C):
//                              (a b c) holds iff B <= AvC
//   separation-promotion:      a loc family that completely separates the
//                              points also totally separates them
audit_report audit_betweenness_laws(const set_family& F);

// Coherence of betweenness across five pairwise completely separated points,
// stated on their canonical representative members (A, B, C, D, E):
//   betweenness-exchange:  B<=AvC and C<=AvD  iff  B<=AvD and C<=BvD
//   betweenness-swap:      B<=AvC and D<=BvC  iff  B<=AvD and D<=AvC
//   betweenness-fork:      B<=AvC and D<=BvE  imply  B<=CvD or B<=AvE
audit_report audit_coherence_laws(const set_family& F);

// Construction-side laws, observed through a full ordering run:
//   section-betweenness:   every classified point lies between the two sides
//                          of its section
//   single-straddler:      at most one point per section leads points on
//                          both sides
// A failure is reported when the run's construction notes record the
// corresponding diagnostic.
audit_report audit_pipeline_laws(const set_family& F);

// All of the above in sequence.
audit_report audit_family(const set_family& F);

}  // namespace latrep
