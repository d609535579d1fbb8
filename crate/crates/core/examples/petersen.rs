//! The Petersen graph: exact Frank number, orientation classes and the
//! structure of its best orientations.

use frank::graph::{generate_family, FamilySpec};
use frank::orientation::Orientation;
use frank::solver::{
    frank_number_exact, orientation_classes, Budget, OrientationSpace, ScanOptions,
};

fn main() {
    let g = generate_family(&FamilySpec::Petersen).unwrap();
    let report = frank_number_exact(&g, 3, &Budget::default()).unwrap();
    println!("F(Petersen) = {:?}", report.frank_number);
    println!(
        "scanned {} orientations, {} strongly connected, {} maximal deletable sets, no {}-cover",
        report.stats.orientations_scanned,
        report.stats.sc_orientations,
        report.stats.maximal_deletable_sets,
        report.lower_bound.no_cover_of_size.unwrap(),
    );

    for reversal in [false, true] {
        let classes = orientation_classes(&g, reversal).unwrap();
        let big = classes
            .classes
            .iter()
            .filter(|c| c.deletable_count() >= 7)
            .count();
        println!(
            "classes (reversal quotient {reversal}): {} of {} orientations, {big} with at least 7 deletable arcs",
            classes.count(),
            classes.sc_orientations
        );
    }

    let space = OrientationSpace::new(&g).unwrap();
    let all = ScanOptions {
        fix_first_edge: false,
        ..ScanOptions::default()
    };
    let mut colors = std::collections::BTreeSet::new();
    for (bits, _) in space.iter_sc(&all).unwrap() {
        let c = Orientation::from_u64(&g, bits).color_vertices();
        colors.insert((c.red.len(), c.green.len()));
    }
    println!("(red, green) counts over all strongly connected orientations: {colors:?}");
}
