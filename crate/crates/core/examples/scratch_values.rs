//! Dev scratch: print exact values for the headline polytopes.

use ternary_polytopes::poset::{root_system, RootSystemKind};
use ternary_polytopes::{LatticePolytope, RationalCone};

fn main() {
    for (kind, n, name) in [
        (RootSystemKind::A, 2, "A2"),
        (RootSystemKind::B, 2, "B2"),
        (RootSystemKind::A, 3, "A3"),
        (RootSystemKind::D, 3, "D3"),
        (RootSystemKind::A, 4, "A4"),
    ] {
        let rel = root_system(kind, n).unwrap().ternary_relation();
        let poly = LatticePolytope::from_relation(&rel);
        let cone = RationalCone::from_rows(rel.dual_cone_rows(), rel.n());
        let v = cone.extreme_rays();
        println!(
            "{name}: elements={} triples={} gens={} dim={} verts={} facets(rays)={} lineality={} nvol={}",
            rel.n(),
            rel.triples().len(),
            poly.points().len(),
            poly.dim(),
            poly.vertices().len(),
            v.rays.len(),
            v.lineality.len(),
            poly.normalized_volume(),
        );
        if name == "A4" {
            let mut cut = 0;
            let mut onetwo = 0;
            for ray in &v.rays {
                let entries: std::collections::BTreeSet<i64> =
                    ray.iter().map(|x| i64::try_from(x).unwrap()).collect();
                if entries.iter().all(|&x| x == 0 || x == 1) {
                    cut += 1;
                } else if entries.iter().all(|&x| x == 1 || x == 2) {
                    onetwo += 1;
                }
            }
            println!("  A4 rays: {cut} cut-type, {onetwo} of values {{1,2}}");
        }
    }
}
