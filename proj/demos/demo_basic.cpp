// End-to-end tour: build the lens region, sweep it, check the raster oracle,
// realize a small tree, and print everything.

#include <iostream>

#include "parareeb/emit.hpp"
#include "parareeb/oracle.hpp"
#include "parareeb/realize.hpp"

using namespace parareeb;

int main() {
    // The lens {x > y^2} and {x < -y^2 + 2}: two congruent parabolas.
    Arrangement lens;
    lens.label = "lens";
    lens.halves.push_back({Curve::parabola_x(Rational(1), Rational(0), Rational(0)), false});
    lens.halves.push_back({Curve::parabola_x(Rational(-1), Rational(0), Rational(2)), true});

    ReebGraph g = build_reeb(lens);
    std::cout << "lens graph: " << g.vertices.size() << " vertices, " << g.edges.size()
              << " edges\n";
    for (const auto& v : g.vertices)
        std::cout << "  " << vertex_kind_name(v.kind) << " at x = "
                  << (is_rational(v.x) ? rat_to_string(as_rational(v.x))
                                       : std::to_string(scalar_to_double(v.x)))
                  << "\n";

    auto verdict = agree(g, raster_reeb_stable(lens, 256, 256));
    std::cout << "raster oracle: " << (verdict.agree ? "agrees" : verdict.diagnostics) << "\n";

    // Realize the star K_{1,3} with parabolas of class |a| = 1.
    auto res = realize_tree(Tree::star(3), Family::Parabola);
    std::cout << "K_{1,3}: certified=" << res.certified << " with "
              << res.arrangement.halves.size() << " curves in "
              << congruence_classes(res.arrangement).size() << " congruence class(es)\n";
    std::cout << arrangement_to_json(res.arrangement).dump(2) << "\n";
    return 0;
}
