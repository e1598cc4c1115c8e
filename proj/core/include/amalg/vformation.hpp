#pragma once

#include <map>
#include <string>

#include "amalg/structure.hpp"
#include "amalg/theory.hpp"

namespace amalg {

/// Amalgamation input in normalized shape: C is the exact overlap of A and B
/// and the induced substructure of each; the embeddings are inclusions.
struct VFormation {
    Structure A;
    Structure B;
    Structure C;

    bool operator==(const VFormation&) const = default;
};

/// VFormation invariants: shared universe overlap, induced substructures,
/// matching operation signatures.
Report vformation_check(const VFormation& v);

struct NormalizedInstance {
    VFormation v;
    std::map<std::string, std::string> aMap;  // original A label -> normalized label
    std::map<std::string, std::string> bMap;
};

/// Renames an arbitrary amalgamation instance (C embedded into A and B via i1
/// and k1) into an isomorphic normalized copy: C keeps its labels, elements of
/// A outside the image keep their labels suffixed "@a", B likewise with "@b".
/// Throws NotAnEmbedding if either map fails is_embedding, InvalidInput if the
/// deterministic renaming would collide.
NormalizedInstance normalize_instance(const Structure& A, const Structure& B, const Structure& C,
                                      const std::map<std::string, std::string>& i1,
                                      const std::map<std::string, std::string>& k1,
                                      const Theory& t);

}  // namespace amalg
