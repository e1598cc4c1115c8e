#pragma once

#include <string>

#include "amalg/relation.hpp"
#include "amalg/report.hpp"
#include "amalg/structure.hpp"

namespace amalg::auxrel {

/// ll is an auxiliary relation on the poset (S, leq): finer than leq and
/// satisfying the interpolation condition (A): w leq x ll y leq z implies
/// w ll z. Also checks the derived facts (ll antisymmetric and transitive).
/// Throws NotAPoset when leq is not a partial order.
Report is_auxiliary(const Structure& s);

/// Auxiliary with an antireflexive ll. Never throws; poset failures are
/// reported as violations.
Report is_causal_space(const Structure& s);

enum class OperatorMode { Extensive, Contractive };

/// The relation induced by a unary operation K of the structure:
/// Extensive mode sets x ll y iff K(x) leq y, Contractive sets x ll y iff
/// x leq K(y). K must be isotone and extensive (resp. contractive); all
/// hypotheses are checked with witnesses.
BinRel auxiliary_from_operator(const Structure& poset, const std::string& opName,
                               OperatorMode mode);

}  // namespace amalg::auxrel
