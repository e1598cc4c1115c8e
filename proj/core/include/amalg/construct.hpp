#pragma once

#include <map>
#include <string>

#include "amalg/relation.hpp"
#include "amalg/report.hpp"
#include "amalg/structure.hpp"
#include "amalg/theory.hpp"
#include "amalg/vformation.hpp"

namespace amalg::construct {

enum class AmalgamMode { AP, SAP, SUPER };

std::string to_string(AmalgamMode m);

/// Which constructive recipe a theory falls under.
struct CaseTag {
    enum Kind { CASE_B, CASE_I, CASE_II, CASE_III };
    Kind kind;
    // For CASE_I / CASE_II: the admissibility side conditions that held.
    bool c1 = false;
    bool c2 = false;

    bool operator==(const CaseTag&) const = default;
};

/// Dispatch: CASE_III when both A1 and A2 are demanded, CASE_B when neither,
/// CASE_I / CASE_II for one-sided A1/A2 provided F holds together with the
/// antisymmetry side condition. Theories with extra axioms, operations that
/// do not preserve leq, or without transitivity are rejected — those route to
/// the oracle. Throws Inadmissible naming the first failed clause.
CaseTag admissible_case(const Theory& t);

/// The composition-union order on the union of the two arms:
/// leqA, leqB, leqA∘leqB and leqB∘leqA.
BinRel amalgamate_leq(const VFormation& v);

struct Amalgam {
    Structure D;
    std::map<std::string, std::string> iota;   // universe(A) -> universe(D)
    std::map<std::string, std::string> kappa;  // universe(B) -> universe(D)

    bool operator==(const Amalgam&) const = default;
};

/// Composition-union amalgam over universe(A) ∪ universe(B). ll comes from the
/// four-term union (cases B, I, II) or the eight-term union (case III); ops
/// extend by union of graphs. The result is always re-verified at SUPER before
/// return — an internal failure raises VerificationFailed, never a silent
/// wrong answer.
Amalgam amalgamate(const VFormation& v, const Theory& t);

/// Checks in order: D validates, iota and kappa are embeddings, the two agree
/// on C; at SAP the images intersect exactly in the image of C; at SUPER every
/// cross leq pair interpolates through C in both directions.
Report verify(const VFormation& v, const Amalgam& w, const Theory& t, AmalgamMode mode);

/// Lifts the auxiliary relation of d along a poset extension (E, eleq) of
/// (universe(d), leq_d), by the case formula for the theory. The result
/// validates t and restricts back to ll_d exactly; both are checked.
BinRel lift(const Structure& d, const BinRel& eleq, const Theory& t);

/// Given eleq, a verified superamalgam of the leq-reducts over a possibly
/// larger universe E, builds the composition-union amalgam on A ∪ B, checks it
/// agrees with eleq there (superamalgamation determines the order on the union
/// uniquely), lifts ll to E, and returns the expanded amalgam verified at
/// SUPER. Throws NotASuperamalgam when eleq is not one or disagrees with the
/// union.
Amalgam expand_superamalgam(const VFormation& v, const BinRel& eleq, const Theory& t);

/// Deterministic linear extension of a partial order: repeatedly emit the
/// lexicographically least minimal element among those remaining.
BinRel szpilrajn(const BinRel& r);

/// For arms whose ll is a linear order coarsening leq: amalgamate both
/// relations by composition-union (coarser-order regime), then linearize the
/// resulting ll. The output extends both arms; this is checked, not assumed.
Amalgam linearize_pipeline(const VFormation& v, const Theory& t);

/// Plain-union amalgam for theories without transitivity: each relation of D
/// is the union of the arm relations, verified at SAP.
Amalgam free_amalgamate(const VFormation& v, const Theory& t);

}  // namespace amalg::construct
