//! Named parameter points for catalog cases.

use exthyp::{Kernel, RegPair, Result};

/// Coordinates accepted by [`pt!`]: scalars or fixed lists.
pub trait Coords {
    fn coords(self) -> Vec<f64>;
}

impl Coords for f64 {
    fn coords(self) -> Vec<f64> {
        vec![self]
    }
}

impl Coords for i32 {
    fn coords(self) -> Vec<f64> {
        vec![self as f64]
    }
}

impl<const N: usize> Coords for [f64; N] {
    fn coords(self) -> Vec<f64> {
        self.to_vec()
    }
}

impl Coords for Vec<f64> {
    fn coords(self) -> Vec<f64> {
        self
    }
}

/// An ordered set of named coordinates. Scalars are one-element lists.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    entries: Vec<(&'static str, Vec<f64>)>,
}

/// Builds a [`Point`] from `name = value` pairs.
macro_rules! pt {
    ($($k:ident = $v:expr),* $(,)?) => {
        $crate::catalog::point::Point::from_entries(vec![
            $((stringify!($k), $crate::catalog::point::Coords::coords($v))),*
        ])
    };
}
pub(crate) use pt;

impl Point {
    pub fn from_entries(entries: Vec<(&'static str, Vec<f64>)>) -> Self {
        Point { entries }
    }

    /// Returns a copy with `key` replaced or appended.
    pub fn with(&self, key: &'static str, value: impl Coords) -> Self {
        let mut p = self.clone();
        let v = value.coords();
        match p.entries.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = v,
            None => p.entries.push((key, v)),
        }
        p
    }

    pub fn has(&self, key: &str) -> bool {
        self.entries.iter().any(|(k, _)| *k == key)
    }

    /// The list stored under `key`. Catalog points are static, so a missing
    /// key is a programming error.
    pub fn list(&self, key: &str) -> &[f64] {
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.as_slice())
            .unwrap_or_else(|| panic!("catalog point lacks '{key}'"))
    }

    pub fn get(&self, key: &str) -> f64 {
        self.list(key)[0]
    }

    pub fn uint(&self, key: &str) -> u32 {
        self.get(key) as u32
    }

    pub fn opt(&self, key: &str) -> Option<f64> {
        self.has(key).then(|| self.get(key))
    }

    /// `exp` unless a `kummer = [a, c]` entry is present.
    pub fn kernel(&self) -> Result<Kernel> {
        if self.has("kummer") {
            let kc = self.list("kummer");
            Kernel::kummer(kc[0], kc[1])
        } else {
            Ok(Kernel::Exponential)
        }
    }

    /// Regularization pair from `b` and `d`, zero when absent.
    pub fn reg(&self) -> Result<RegPair> {
        RegPair::new(self.opt("b").unwrap_or(0.0), self.opt("d").unwrap_or(0.0))
    }

    /// `name=value` pairs joined by ';', lists joined by '/'.
    pub fn label(&self) -> String {
        self.entries
            .iter()
            .map(|(k, v)| {
                let vals: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
                format!("{k}={}", vals.join("/"))
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}
