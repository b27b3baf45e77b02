//! Labelings and distance-constraint checking.
//!
//! A `ConstraintProfile` lists the minimum label difference required at
//! each distance; `[3,2,1]` is the L(3,2,1) instance of a k-radio
//! labeling, `[p,q]` would be L(p,q). Pairs farther apart than the
//! profile length are unconstrained.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("constraint profile must have at least one entry")]
    EmptyProfile,
    #[error("labeling must assign at least one vertex")]
    EmptyLabeling,
    #[error("labeling has {got} labels but the graph has {want} vertices")]
    LengthMismatch { got: usize, want: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintProfile {
    mins: Vec<u32>,
}

impl ConstraintProfile {
    pub fn new(mins: Vec<u32>) -> Result<Self, LabelingError> {
        if mins.is_empty() {
            return Err(LabelingError::EmptyProfile);
        }
        Ok(Self { mins })
    }

    /// The L(3,2,1) profile.
    pub fn l321() -> Self {
        Self {
            mins: vec![3, 2, 1],
        }
    }

    /// Largest constrained distance.
    pub fn radius(&self) -> usize {
        self.mins.len()
    }

    /// Required difference at distance `d` (1-based); 0 beyond the radius.
    pub fn required(&self, d: usize) -> u32 {
        if d == 0 || d > self.mins.len() {
            0
        } else {
            self.mins[d - 1]
        }
    }

    pub fn mins(&self) -> &[u32] {
        &self.mins
    }
}

impl Default for ConstraintProfile {
    fn default() -> Self {
        Self::l321()
    }
}

/// Total assignment of nonnegative labels, one per vertex. Never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Result<Self, LabelingError> {
        if labels.is_empty() {
            return Err(LabelingError::EmptyLabeling);
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Difference between the largest and smallest label.
    pub fn span(&self) -> u32 {
        let max = *self.labels.iter().max().expect("nonempty");
        let min = *self.labels.iter().min().expect("nonempty");
        max - min
    }

    /// Same labeling shifted so the smallest label is 0.
    pub fn normalized(&self) -> Labeling {
        let min = *self.labels.iter().min().expect("nonempty");
        Labeling {
            labels: self.labels.iter().map(|&l| l - min).collect(),
        }
    }
}

/// One constraint failure: vertices `i < j` at `distance` needed labels at
/// least `required` apart but differ by `actual`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub distance: usize,
    pub required: u32,
    pub actual: u32,
}

/// Checks `f` against every pair of `g` within the profile radius and
/// reports all violations, each pair once (`i < j`). Empty result means the
/// labeling is valid.
pub fn check_labeling(
    g: &Graph,
    f: &Labeling,
    p: &ConstraintProfile,
) -> Result<Vec<Violation>, LabelingError> {
    if f.len() != g.n() {
        return Err(LabelingError::LengthMismatch {
            got: f.len(),
            want: g.n(),
        });
    }
    let dists = g.distances_up_to(p.radius());
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in (i + 1)..g.n() {
            let Some(d) = dists.dist(i, j) else { continue };
            let required = p.required(d);
            if required == 0 {
                continue;
            }
            let actual = f.get(i).abs_diff(f.get(j));
            if actual < required {
                out.push(Violation {
                    i,
                    j,
                    distance: d,
                    required,
                    actual,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantSpec;

    fn lab(v: &[u32]) -> Labeling {
        Labeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn span_and_normalize() {
        let f = lab(&[0, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);
        assert_eq!(f.span(), 11);
        assert_eq!(lab(&[7]).span(), 0);
        assert_eq!(lab(&[2, 5]).span(), 3);

        assert_eq!(lab(&[2, 5]).normalized(), lab(&[0, 3]));
        assert_eq!(lab(&[0, 3]).normalized(), lab(&[0, 3]));
        assert!(Labeling::new(vec![]).is_err());
    }

    #[test]
    fn twelve_pattern_is_valid_on_c12() {
        let g = Graph::circulant(CirculantSpec::new(12, [1, 3]).unwrap());
        let f = lab(&[0, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);
        let v = check_labeling(&g, &f, &ConstraintProfile::l321()).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn p2_violations() {
        let g = Graph::path(2).unwrap();
        let p = ConstraintProfile::l321();
        let v = check_labeling(&g, &lab(&[0, 0]), &p).unwrap();
        assert_eq!(
            v,
            vec![Violation {
                i: 0,
                j: 1,
                distance: 1,
                required: 3,
                actual: 0
            }]
        );
        assert!(check_labeling(&g, &lab(&[0, 3]), &p).unwrap().is_empty());
        assert!(check_labeling(&g, &lab(&[0, 1, 2]), &p).is_err());
    }

    #[test]
    fn shift_preserves_violations() {
        let g = Graph::circulant(CirculantSpec::new(8, [1, 3]).unwrap());
        let p = ConstraintProfile::l321();
        let base: Vec<u32> = vec![0, 4, 8, 1, 5, 9, 2, 6];
        let shifted: Vec<u32> = base.iter().map(|&l| l + 7).collect();
        let v1 = check_labeling(&g, &lab(&base), &p).unwrap();
        let v2 = check_labeling(&g, &lab(&shifted), &p).unwrap();
        assert_eq!(v1, v2);
    }
}
