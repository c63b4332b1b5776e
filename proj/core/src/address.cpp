#include "tifs/address.hpp"

namespace tifs {

Word relative_address(const System& system, const Tile& tile, const Tiling& context, double tolerance) {
    (void)system;
    TileMatcher matcher(context, tolerance);
    const Tile* match = matcher.find(tile);
    if (!match) throw Error(ErrorKind::TileNotInContext, "tile is not a member of the context tiling");
    return match->body;
}

DottedAddress cancel(const DottedAddress& raw) { return cancel(raw.context, raw.body); }

DottedAddress cancel(const Word& context, const Word& body) {
    DottedAddress reduced{context, body};
    while (!reduced.context.empty() && !reduced.body.empty() &&
           reduced.context.back() == reduced.body.front()) {
        reduced.context = reduced.context.prefix(reduced.context.length() - 1);
        reduced.body = reduced.body.dropped(1);
    }
    return reduced;
}

std::vector<DottedAddress> absolute_addresses(const System& system, const Tile& tile, const Word& theta,
                                              double tolerance) {
    if (theta.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "tiling contexts are reversed words");
    system.require_admissible(theta);

    // Pi(empty) is rooted where the blow-up starts so that the prefix chain
    // is nested.
    std::optional<int> empty_root;
    if (!theta.empty()) empty_root = system.head(theta.front());

    for (int l = 0; l <= theta.length(); ++l) {
        Tiling prefix_tiling = tiling_of(system, theta.prefix(l), empty_root);
        TileMatcher matcher(prefix_tiling, tolerance);
        const Tile* match = matcher.find(tile);
        if (!match) continue;
        return {cancel(theta.prefix(l), match->body)};
    }
    throw Error(ErrorKind::TileNotInContext, "tile is not a member of the blow-up tiling");
}

Tile tile_from_absolute(const System& system, const DottedAddress& address) {
    const Word& theta = address.context;
    const Word& body = address.body;
    if (theta.orientation() != Orientation::Reversed || body.orientation() != Orientation::Forward)
        throw Error(ErrorKind::InvalidAddress, "address orientation mismatch");
    if (!system.admissible(theta) || !system.admissible(body))
        throw Error(ErrorKind::InvalidAddress, "address words must be edge paths");
    if (body.empty()) throw Error(ErrorKind::InvalidAddress, "address body must be nonempty");

    // The level constraint xi_minus(body) <= xi(theta) < xi(body) holds for
    // every address the address system produces, but pi-hat evaluates any
    // admissible reduced pair, so it is not required here.
    int level = system.xi(theta);
    if (!theta.empty()) {
        if (*system.start_vertex(body) != *system.end_vertex(theta))
            throw Error(ErrorKind::InvalidAddress, "body does not start where the context ends");
        if (theta.back() == body.front())
            throw Error(ErrorKind::InvalidAddress, "address is not reduced: " + address.str());
    }

    Tile tile;
    tile.context = theta;
    tile.body = body;
    tile.map = compose(system, theta, MapSign::Inverse) * compose(system, body, MapSign::Forward);
    tile.map.set_provenance(theta, body);
    tile.prototile = {*system.end_vertex(body), system.xi(body) - level};
    return tile;
}

} // namespace tifs
