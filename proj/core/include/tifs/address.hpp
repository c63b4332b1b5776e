#pragma once

#include <string>
#include <vector>

#include "tifs/tiling.hpp"

namespace tifs {

/// A dotted address theta.omega naming the tile f_{-theta} f_omega(A). In a
/// reduced address the symbols on either side of the dot differ.
struct DottedAddress {
    Word context{Orientation::Reversed};
    Word body{Orientation::Forward};

    std::string str() const { return context.str() + "." + body.str(); }

    bool operator==(const DottedAddress& other) const {
        return context == other.context && body == other.body;
    }
    bool operator<(const DottedAddress& other) const {
        if (!(context == other.context)) return context < other.context;
        return body < other.body;
    }
};

/// The unique body word naming the tile inside the given context tiling
/// (canonical or blow-up); tile membership is decided by map identity.
Word relative_address(const System& system, const Tile& tile, const Tiling& context,
                      double tolerance = 1e-9);

/// Removes equal symbols adjacent to the dot until they differ or one side
/// is empty.
DottedAddress cancel(const DottedAddress& raw);
DottedAddress cancel(const Word& context, const Word& body);

/// The absolute address of a tile of tiling_of(theta): the minimal prefix
/// theta|l still containing the tile, dotted with the relative address
/// there, in reduced form. Tiles of the level-0 tiling get their unique
/// empty-context address.
std::vector<DottedAddress> absolute_addresses(const System& system, const Tile& tile, const Word& theta,
                                              double tolerance = 1e-9);

/// Evaluates a dotted address to its tile; rejects pairs violating
/// admissibility, the level constraint on the body, root compatibility, or
/// the reduced-form rule.
Tile tile_from_absolute(const System& system, const DottedAddress& address);

} // namespace tifs
