//! Base points and their cyclic order.
//!
//! The base curve is never materialized: only the cyclic order it induces on
//! the base points is kept. Split labels `a+` / `a-` produced by pushing a real
//! base point off the real axis share one cyclic slot.

use std::fmt;

use num_complex::Complex64;

use crate::error::LineComplexError;

/// Index of a label inside a [`BasePointSet`].
pub type LabelId = usize;

const VALUE_EPS: f64 = 1e-12;

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn conj(self) -> Self {
        match self {
            ExtendedComplex::Finite(z) => ExtendedComplex::Finite(z.conj()),
            ExtendedComplex::Infinity => ExtendedComplex::Infinity,
        }
    }

    pub fn is_real(self) -> bool {
        match self {
            ExtendedComplex::Finite(z) => z.im.abs() <= VALUE_EPS,
            ExtendedComplex::Infinity => true,
        }
    }

    /// Chordal-style closeness; infinity only matches infinity.
    pub fn close_to(self, other: Self, tol: f64) -> bool {
        match (self, other) {
            (ExtendedComplex::Finite(a), ExtendedComplex::Finite(b)) => (a - b).norm() <= tol,
            (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => true,
            _ => false,
        }
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedComplex::Infinity => write!(f, "inf"),
            ExtendedComplex::Finite(z) => write!(f, "{}", format_complex(*z)),
        }
    }
}

/// `re+imi` with `.` as decimal separator.
pub fn format_complex(z: Complex64) -> String {
    let re = if z.re == 0.0 { 0.0 } else { z.re };
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im < 0.0 {
        format!("{}-{}i", re, -im)
    } else {
        format!("{}+{}i", re, im)
    }
}

/// Value carried by a label.
#[derive(Debug, Clone, PartialEq)]
pub enum LabelValue {
    Point(ExtendedComplex),
    /// One half of a real base point `base_value` pushed to the upper (`+`)
    /// or lower (`-`) half-plane.
    Split {
        base: String,
        base_value: f64,
        upper: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasePoint {
    pub name: String,
    pub value: LabelValue,
}

impl BasePoint {
    pub fn point(name: impl Into<String>, value: ExtendedComplex) -> Self {
        BasePoint {
            name: name.into(),
            value: LabelValue::Point(value),
        }
    }

    pub fn finite(name: impl Into<String>, re: f64, im: f64) -> Self {
        Self::point(name, ExtendedComplex::Finite(Complex64::new(re, im)))
    }

    /// The value on the sphere this label projects to. Split labels project
    /// to their real base value.
    pub fn projection(&self) -> ExtendedComplex {
        match &self.value {
            LabelValue::Point(v) => *v,
            LabelValue::Split { base_value, .. } => {
                ExtendedComplex::Finite(Complex64::new(*base_value, 0.0))
            }
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self.value, LabelValue::Split { .. })
    }
}

/// Cyclically ordered base points.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePointSet {
    labels: Vec<BasePoint>,
    slots: Vec<usize>,
    slot_count: usize,
    symmetric: bool,
    conj: Vec<Option<LabelId>>,
}

impl BasePointSet {
    pub fn new(labels: Vec<BasePoint>, symmetric: bool) -> Result<Self, LineComplexError> {
        let mut slots = Vec::with_capacity(labels.len());
        let mut slot = 0usize;
        for (i, label) in labels.iter().enumerate() {
            if i > 0 && shares_slot(&labels[i - 1], label) {
                slots.push(slot - 1);
            } else {
                slots.push(slot);
                slot += 1;
            }
        }
        if slot < 2 {
            return Err(LineComplexError::InvalidBaseSet(format!(
                "need at least two base points, got {slot}"
            )));
        }
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                if labels[i].name == labels[j].name {
                    return Err(LineComplexError::InvalidBaseSet(format!(
                        "duplicate label name `{}`",
                        labels[i].name
                    )));
                }
                let same_slot = slots[i] == slots[j];
                if !same_slot
                    && !labels[i].is_split()
                    && !labels[j].is_split()
                    && labels[i]
                        .projection()
                        .close_to(labels[j].projection(), VALUE_EPS)
                {
                    return Err(LineComplexError::InvalidBaseSet(format!(
                        "labels `{}` and `{}` have the same value",
                        labels[i].name, labels[j].name
                    )));
                }
            }
        }
        if labels.iter().filter(|l| l.name == "0").count() > 1 {
            return Err(LineComplexError::InvalidBaseSet(
                "more than one label named `0`".into(),
            ));
        }
        let conj: Vec<Option<LabelId>> = (0..labels.len())
            .map(|i| find_conjugate(&labels, i))
            .collect();
        if symmetric {
            for (i, c) in conj.iter().enumerate() {
                match c {
                    Some(j) if conj[*j] == Some(i) => {}
                    _ => {
                        return Err(LineComplexError::InvalidBaseSet(format!(
                            "label `{}` has no conjugate in a symmetric base set",
                            labels[i].name
                        )))
                    }
                }
            }
        }
        Ok(BasePointSet {
            labels,
            slots,
            slot_count: slot,
            symmetric,
            conj,
        })
    }

    /// Number of cyclic positions (split pairs count once).
    pub fn q(&self) -> usize {
        self.slot_count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[BasePoint] {
        &self.labels
    }

    pub fn label(&self, id: LabelId) -> &BasePoint {
        &self.labels[id]
    }

    pub fn name(&self, id: LabelId) -> &str {
        &self.labels[id].name
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn slot(&self, id: LabelId) -> usize {
        self.slots[id]
    }

    /// Labels occupying a slot, in stored order.
    pub fn labels_in_slot(&self, slot: usize) -> impl Iterator<Item = LabelId> + '_ {
        (0..self.labels.len()).filter(move |&i| self.slots[i] == slot)
    }

    pub fn index_of(&self, name: &str) -> Option<LabelId> {
        self.labels.iter().position(|l| l.name == name)
    }

    pub fn zero(&self) -> Option<LabelId> {
        self.index_of("0")
    }

    pub fn conj(&self, id: LabelId) -> Option<LabelId> {
        self.conj[id]
    }

    pub fn is_real(&self, id: LabelId) -> bool {
        self.conj[id] == Some(id)
    }

    /// Anticlockwise gap from slot of `from` to slot of `to`.
    pub fn gap(&self, from: LabelId, to: LabelId) -> usize {
        let q = self.slot_count;
        (self.slots[to] + q - self.slots[from]) % q
    }

    /// Replace label `id` by a split pair `name+`, `name-` occupying its slot.
    pub(crate) fn with_split(
        &self,
        id: LabelId,
    ) -> Result<(Self, LabelId, LabelId), LineComplexError> {
        let base = &self.labels[id];
        let value = match base.projection() {
            ExtendedComplex::Finite(z) if z.im.abs() <= VALUE_EPS => z.re,
            _ => {
                return Err(LineComplexError::InvalidBaseSet(format!(
                    "label `{}` is not a finite real base point",
                    base.name
                )))
            }
        };
        let mut labels = self.labels.clone();
        let plus = BasePoint {
            name: format!("{}+", base.name),
            value: LabelValue::Split {
                base: base.name.clone(),
                base_value: value,
                upper: true,
            },
        };
        let minus = BasePoint {
            name: format!("{}-", base.name),
            value: LabelValue::Split {
                base: base.name.clone(),
                base_value: value,
                upper: false,
            },
        };
        labels[id] = plus;
        labels.insert(id + 1, minus);
        let set = BasePointSet::new(labels, self.symmetric)?;
        Ok((set, id, id + 1))
    }

    /// Inverse of [`with_split`](Self::with_split); returns the merged set and
    /// the relabeling map from old ids to new ids.
    pub(crate) fn with_merged(
        &self,
        base_name: &str,
    ) -> Result<(Self, Vec<LabelId>), LineComplexError> {
        let plus = self.index_of(&format!("{base_name}+"));
        let minus = self.index_of(&format!("{base_name}-"));
        let (plus, minus) = match (plus, minus) {
            (Some(p), Some(m)) if self.slots[p] == self.slots[m] => (p, m),
            _ => {
                return Err(LineComplexError::InvalidBaseSet(format!(
                    "no split pair for `{base_name}`"
                )))
            }
        };
        let value = match &self.labels[plus].value {
            LabelValue::Split { base_value, .. } => *base_value,
            _ => unreachable!(),
        };
        let keep = plus.min(minus);
        let drop = plus.max(minus);
        let mut labels = Vec::with_capacity(self.labels.len() - 1);
        let mut map = vec![0; self.labels.len()];
        for (i, l) in self.labels.iter().enumerate() {
            if i == drop {
                map[i] = map[keep];
                continue;
            }
            map[i] = labels.len();
            if i == keep {
                labels.push(BasePoint::finite(base_name, value, 0.0));
            } else {
                labels.push(l.clone());
            }
        }
        Ok((BasePointSet::new(labels, self.symmetric)?, map))
    }
}

fn shares_slot(a: &BasePoint, b: &BasePoint) -> bool {
    match (&a.value, &b.value) {
        (
            LabelValue::Split {
                base: ba,
                upper: ua,
                ..
            },
            LabelValue::Split {
                base: bb,
                upper: ub,
                ..
            },
        ) => ba == bb && ua != ub,
        _ => false,
    }
}

fn find_conjugate(labels: &[BasePoint], i: LabelId) -> Option<LabelId> {
    match &labels[i].value {
        LabelValue::Point(v) => {
            let target = v.conj();
            labels.iter().position(|l| match &l.value {
                LabelValue::Point(w) => w.close_to(target, VALUE_EPS),
                _ => false,
            })
        }
        LabelValue::Split { base, upper, .. } => labels.iter().position(|l| match &l.value {
            LabelValue::Split {
                base: b, upper: u, ..
            } => b == base && u != upper,
            _ => false,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn airy_base() -> BasePointSet {
        BasePointSet::new(
            vec![
                BasePoint::finite("a", 1.0, 1.0),
                BasePoint::finite("a~", 1.0, -1.0),
                BasePoint::finite("0", 0.0, 0.0),
            ],
            true,
        )
        .unwrap()
    }

    #[test]
    fn conjugation_is_an_involution() {
        let b = airy_base();
        assert_eq!(b.conj(0), Some(1));
        assert_eq!(b.conj(1), Some(0));
        assert!(b.is_real(2));
        assert_eq!(b.q(), 3);
        assert_eq!(b.gap(2, 0), 1);
        assert_eq!(b.gap(0, 2), 2);
    }

    #[test]
    fn rejects_duplicates_and_tiny_sets() {
        assert!(BasePointSet::new(vec![BasePoint::finite("0", 0.0, 0.0)], false).is_err());
        let dup = vec![
            BasePoint::finite("0", 0.0, 0.0),
            BasePoint::finite("b", 0.0, 0.0),
        ];
        assert!(BasePointSet::new(dup, false).is_err());
        let asym = vec![
            BasePoint::finite("0", 0.0, 0.0),
            BasePoint::finite("a", 1.0, 1.0),
        ];
        assert!(BasePointSet::new(asym.clone(), true).is_err());
        assert!(BasePointSet::new(asym, false).is_ok());
    }

    #[test]
    fn split_pairs_share_a_slot_and_merge_back() {
        let b = BasePointSet::new(
            vec![
                BasePoint::finite("0", 0.0, 0.0),
                BasePoint::finite("c", 1.0, 1.0),
                BasePoint::finite("r", 2.0, 0.0),
                BasePoint::finite("c~", 1.0, -1.0),
            ],
            true,
        )
        .unwrap();
        let (split, p, m) = b.with_split(2).unwrap();
        assert_eq!(split.q(), 4);
        assert_eq!(split.len(), 5);
        assert_eq!(split.slot(p), split.slot(m));
        assert_eq!(split.conj(p), Some(m));
        assert!(!split.is_real(p));
        let (merged, map) = split.with_merged("r").unwrap();
        assert_eq!(merged, b);
        assert_eq!(map[p], map[m]);
    }

    #[test]
    fn complex_literals() {
        assert_eq!(format_complex(Complex64::new(1.0, -1.0)), "1-1i");
        assert_eq!(format_complex(Complex64::new(-0.0, 0.0)), "0+0i");
        assert_eq!(format_complex(Complex64::new(0.5, 2.0)), "0.5+2i");
    }
}
