//! Grouping of a lexicographically sorted slice of lattice points by image.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::lattice::LatticePoint;
use crate::semigroup::{evaluate_on, Element, SemigroupSpec};

const PARALLEL_THRESHOLD: usize = 4096;

/// Images of a slice and which of its points are useless.
pub(crate) struct Fibers {
    pub images: Vec<Element>,
    /// `useless[i]` iff some earlier (lex-smaller) point has the same image.
    pub useless: Vec<bool>,
}

impl Fibers {
    /// Indices of the lex-minimal point of each fiber, in slice order.
    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.useless.iter().enumerate().filter(|(_, u)| !**u).map(|(i, _)| i)
    }
}

/// `points` must be sorted lexicographically; the first point seen in each
/// fiber is then its lex-minimum.
pub(crate) fn classify(spec: &SemigroupSpec, gens: &[Element], points: &[LatticePoint]) -> Fibers {
    let images: Vec<Element> = if points.len() >= PARALLEL_THRESHOLD {
        points.par_iter().map(|p| evaluate_on(spec, gens, p.coords())).collect()
    } else {
        points.iter().map(|p| evaluate_on(spec, gens, p.coords())).collect()
    };
    debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
    let mut seen: HashMap<&Element, usize> = HashMap::with_capacity(images.len());
    let useless = images
        .iter()
        .enumerate()
        .map(|(i, img)| *seen.entry(img).or_insert(i) != i)
        .collect();
    Fibers { images, useless }
}
