//! Grid-aligned homeomorphisms of the sampled circle and the finite groups
//! they form.
//!
//! Restricting to index permutations (rotations and reflections on the sample
//! grid) keeps the group action exact: acting on a function permutes its
//! samples and introduces no interpolation error. The three presets are the
//! trivial group, the cyclic rotation group of order N, and the dihedral
//! group of order 2N.

use std::fmt;

use crate::error::{Error, Result};
use crate::function::CircularFunction;

/// Whether an element rotates or reflects the sample grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    /// `r_s`: index `i` maps to `(i + s) mod N`.
    Rotation,
    /// `q_s`: index `i` maps to `(s - i) mod N` (reflection then rotation).
    Reflection,
}

/// One grid-aligned homeomorphism of the circle with N samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    kind: ElementKind,
    shift: usize,
    n: usize,
}

impl GroupElement {
    /// The rotation `r_s` on a grid of `n` samples; `shift` is reduced mod `n`.
    pub fn rotation(shift: i64, n: usize) -> Self {
        assert!(n > 0, "group elements need a positive sample count");
        Self {
            kind: ElementKind::Rotation,
            shift: shift.rem_euclid(n as i64) as usize,
            n,
        }
    }

    /// The reflection-then-rotation `q_s` on a grid of `n` samples.
    pub fn reflection(shift: i64, n: usize) -> Self {
        assert!(n > 0, "group elements need a positive sample count");
        Self {
            kind: ElementKind::Reflection,
            shift: shift.rem_euclid(n as i64) as usize,
            n,
        }
    }

    /// The identity `r_0`.
    pub fn identity(n: usize) -> Self {
        Self::rotation(0, n)
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Sample count of the grid this element acts on.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.kind == ElementKind::Rotation && self.shift == 0
    }

    /// Image of index `i` under this element.
    #[inline]
    pub fn apply_index(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        match self.kind {
            ElementKind::Rotation => (i + self.shift) % self.n,
            ElementKind::Reflection => (self.shift + self.n - i % self.n) % self.n,
        }
    }

    /// Composition `self . inner`: first apply `inner` to an index, then `self`.
    ///
    /// Both elements must act on the same grid.
    pub fn compose(&self, inner: &GroupElement) -> GroupElement {
        assert_eq!(
            self.n, inner.n,
            "composed elements must share a sample count"
        );
        let a = self.shift as i64;
        let b = inner.shift as i64;
        match (self.kind, inner.kind) {
            // r_a . r_b : i -> a + (i + b)
            (ElementKind::Rotation, ElementKind::Rotation) => GroupElement::rotation(a + b, self.n),
            // r_a . q_b : i -> a + (b - i)
            (ElementKind::Rotation, ElementKind::Reflection) => {
                GroupElement::reflection(a + b, self.n)
            }
            // q_a . r_b : i -> a - (i + b)
            (ElementKind::Reflection, ElementKind::Rotation) => {
                GroupElement::reflection(a - b, self.n)
            }
            // q_a . q_b : i -> a - (b - i)
            (ElementKind::Reflection, ElementKind::Reflection) => {
                GroupElement::rotation(a - b, self.n)
            }
        }
    }

    /// Group inverse: `r_s^-1 = r_{-s}`, reflections are involutions.
    pub fn inverse(&self) -> GroupElement {
        match self.kind {
            ElementKind::Rotation => GroupElement::rotation(-(self.shift as i64), self.n),
            ElementKind::Reflection => *self,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementKind::Rotation => write!(f, "r_{}", self.shift),
            ElementKind::Reflection => write!(f, "q_{}", self.shift),
        }
    }
}

/// Right action of a group element on a function: `act(g, f)(i) = f(g(i))`.
///
/// The convention is fixed here once: `g` is applied to indices first, so
/// `act(g, act(h, f)) = act(h.compose(g), f)`.
pub fn act(g: &GroupElement, phi: &CircularFunction) -> Result<CircularFunction> {
    if g.n() != phi.len() {
        return Err(Error::SizeMismatch {
            left: g.n(),
            right: phi.len(),
        });
    }
    let values = (0..phi.len()).map(|i| phi.values()[g.apply_index(i)]).collect();
    Ok(CircularFunction::from_values_unchecked(values))
}

/// The three finite subgroups of grid homeomorphisms shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupPreset {
    Trivial,
    Cyclic,
    Dihedral,
}

impl std::str::FromStr for GroupPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(GroupPreset::Trivial),
            "cyclic" => Ok(GroupPreset::Cyclic),
            "dihedral" => Ok(GroupPreset::Dihedral),
            other => Err(Error::InvalidParameter {
                what: format!("unknown group preset `{other}`"),
            }),
        }
    }
}

impl fmt::Display for GroupPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupPreset::Trivial => write!(f, "trivial"),
            GroupPreset::Cyclic => write!(f, "cyclic"),
            GroupPreset::Dihedral => write!(f, "dihedral"),
        }
    }
}

/// A finite group of grid-aligned homeomorphisms acting on N samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformGroup {
    preset: GroupPreset,
    n: usize,
}

impl TransformGroup {
    /// A preset group on a grid of `n >= 3` samples.
    pub fn new(preset: GroupPreset, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                what: format!("transform groups need n >= 3, got {n}"),
            });
        }
        Ok(Self { preset, n })
    }

    pub fn preset(&self) -> GroupPreset {
        self.preset
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of elements: 1, N or 2N.
    pub fn order(&self) -> usize {
        match self.preset {
            GroupPreset::Trivial => 1,
            GroupPreset::Cyclic => self.n,
            GroupPreset::Dihedral => 2 * self.n,
        }
    }

    /// All elements in a fixed deterministic order: the identity first, then
    /// the remaining rotations by ascending shift, then reflections by
    /// ascending shift.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order());
        match self.preset {
            GroupPreset::Trivial => out.push(GroupElement::identity(self.n)),
            GroupPreset::Cyclic => {
                out.extend((0..self.n).map(|s| GroupElement::rotation(s as i64, self.n)));
            }
            GroupPreset::Dihedral => {
                out.extend((0..self.n).map(|s| GroupElement::rotation(s as i64, self.n)));
                out.extend((0..self.n).map(|s| GroupElement::reflection(s as i64, self.n)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::sup_distance;
    use crate::rng::SplitMix64;

    fn f(values: &[f64]) -> CircularFunction {
        CircularFunction::new(values.to_vec()).unwrap()
    }

    #[test]
    fn act_examples() {
        let phi = f(&[0.0, 2.0, 1.0, 3.0]);
        let id = GroupElement::identity(4);
        assert_eq!(act(&id, &phi).unwrap().values(), &[0.0, 2.0, 1.0, 3.0]);

        let r1 = GroupElement::rotation(1, 4);
        assert_eq!(act(&r1, &phi).unwrap().values(), &[2.0, 1.0, 3.0, 0.0]);

        let q0 = GroupElement::reflection(0, 4);
        assert_eq!(act(&q0, &phi).unwrap().values(), &[0.0, 3.0, 1.0, 2.0]);
    }

    #[test]
    fn act_rejects_size_mismatch() {
        let phi = f(&[0.0, 1.0, 2.0]);
        let g = GroupElement::rotation(1, 4);
        assert!(matches!(
            act(&g, &phi),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        ));
    }

    #[test]
    fn enumeration_sizes_and_identity_first() {
        for n in [3usize, 4, 8] {
            let t = TransformGroup::new(GroupPreset::Trivial, n).unwrap();
            let c = TransformGroup::new(GroupPreset::Cyclic, n).unwrap();
            let d = TransformGroup::new(GroupPreset::Dihedral, n).unwrap();
            assert_eq!(t.elements().len(), 1);
            assert_eq!(c.elements().len(), n);
            assert_eq!(d.elements().len(), 2 * n);
            for g in [t, c, d] {
                assert!(g.elements()[0].is_identity());
                assert_eq!(g.elements().len(), g.order());
            }
        }
    }

    #[test]
    fn closure_and_inverse_exhaustive() {
        for n in 3..=16usize {
            for preset in [GroupPreset::Trivial, GroupPreset::Cyclic, GroupPreset::Dihedral] {
                let group = TransformGroup::new(preset, n).unwrap();
                let elements = group.elements();
                for a in &elements {
                    assert!(elements.contains(&a.inverse()), "inverse of {a} missing");
                    assert!(a.compose(&a.inverse()).is_identity());
                    for b in &elements {
                        assert!(
                            elements.contains(&a.compose(b)),
                            "composition {a}.{b} escapes the group"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn action_property_exhaustive_small() {
        // act(g, act(h, f)) = act(h.compose(g), f)
        for n in 3..=8usize {
            let group = TransformGroup::new(GroupPreset::Dihedral, n).unwrap();
            let mut rng = SplitMix64::new(7 + n as u64);
            let phi = CircularFunction::new(
                (0..n).map(|_| rng.next_unit() * 2.0 - 1.0).collect(),
            )
            .unwrap();
            assert_eq!(act(&GroupElement::identity(n), &phi).unwrap(), phi);
            for g in group.elements() {
                for h in group.elements() {
                    let lhs = act(&g, &act(&h, &phi).unwrap()).unwrap();
                    let rhs = act(&h.compose(&g), &phi).unwrap();
                    assert_eq!(lhs, rhs, "g = {g}, h = {h}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn action_property_randomized_larger_n() {
        let n = 97usize;
        let group = TransformGroup::new(GroupPreset::Dihedral, n).unwrap();
        let elements = group.elements();
        let mut rng = SplitMix64::new(2024);
        let phi =
            CircularFunction::new((0..n).map(|_| rng.next_unit() * 4.0 - 2.0).collect()).unwrap();
        for _ in 0..200 {
            let g = elements[(rng.next_u64() % elements.len() as u64) as usize];
            let h = elements[(rng.next_u64() % elements.len() as u64) as usize];
            let lhs = act(&g, &act(&h, &phi).unwrap()).unwrap();
            let rhs = act(&h.compose(&g), &phi).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn action_is_isometric() {
        let n = 12usize;
        let mut rng = SplitMix64::new(99);
        let a =
            CircularFunction::new((0..n).map(|_| rng.next_unit() * 2.0 - 1.0).collect()).unwrap();
        let b =
            CircularFunction::new((0..n).map(|_| rng.next_unit() * 2.0 - 1.0).collect()).unwrap();
        let d = sup_distance(&a, &b).unwrap();
        let group = TransformGroup::new(GroupPreset::Dihedral, n).unwrap();
        for g in group.elements() {
            let da = act(&g, &a).unwrap();
            let db = act(&g, &b).unwrap();
            assert_eq!(sup_distance(&da, &db).unwrap(), d);
        }
    }
}
