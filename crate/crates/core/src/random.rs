//! Seeded random small complexes for property sweeps.

use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// A random complex with at most `max_vertices` vertices and at most
/// `max_facets` facets.
///
/// Each generator is a nonempty random subset of the ground set. Unused
/// labels are then compacted away, so every ground vertex lies in a facet.
pub fn random_complex<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    max_facets: usize,
) -> SimplicialComplex {
    assert!((1..=64).contains(&max_vertices) && max_facets >= 1);
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=max_facets);
    let full = VertexSet::full(n).bits();
    let generators: Vec<u64> = (0..count)
        .map(|_| loop {
            let bits = rng.gen::<u64>() & full;
            if bits != 0 {
                break bits;
            }
        })
        .collect();
    let used = VertexSet::from_bits(generators.iter().fold(0, |a, b| a | b));
    let relabel: Vec<usize> = used.to_vec();
    let compact = |bits: u64| {
        VertexSet::from_vertices(
            VertexSet::from_bits(bits)
                .iter()
                .map(|v| relabel.binary_search(&v).unwrap() + 1),
        )
    };
    SimplicialComplex::new(used.len(), generators.into_iter().map(compact))
        .expect("relabelled generators fit the ground set")
}
