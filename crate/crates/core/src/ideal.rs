//! Finitely parametrized ideals used as stand-ins for infinite ideals of the
//! ambient poset.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::poset::{Element, Poset, ROOT};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    /// An explicit set of ids of one window.
    FiniteSet(Vec<usize>),
    /// Cells of `Z_+^2` in the first `rows` rows or the first `cols` columns.
    HookZ2 { rows: u32, cols: u32 },
    /// In `Z_+^d`: points `x` such that for some axis `j`, every coordinate
    /// other than `x_j` is at most `thickness[j]`. A union of bundles of
    /// rays, one bundle parallel to each axis.
    AxisRays(Vec<u32>),
    /// The whole poset.
    Full,
}

impl IdealSpec {
    pub fn needs_coords(&self) -> bool {
        matches!(self, IdealSpec::HookZ2 { .. } | IdealSpec::AxisRays(_))
    }

    /// Membership of one element. The root belongs to every ideal.
    pub fn contains(&self, element: &Element) -> Result<bool> {
        if element.id == ROOT {
            return Ok(true);
        }
        match self {
            IdealSpec::Full => Ok(true),
            IdealSpec::FiniteSet(ids) => Ok(ids.contains(&element.id)),
            IdealSpec::HookZ2 { .. } | IdealSpec::AxisRays(_) => {
                let coords = element.coords.as_deref().ok_or_else(|| Error::MissingCoords {
                    spec: self.to_string(),
                    element: element.id,
                })?;
                self.contains_coords(coords).ok_or_else(|| Error::DimensionMismatch {
                    spec: self.to_string(),
                    element: element.id,
                    expected: self.dimension().unwrap_or(0),
                    found: coords.len(),
                })
            }
        }
    }

    /// Coordinate membership; `None` if the dimension does not fit.
    pub fn contains_coords(&self, coords: &[u32]) -> Option<bool> {
        match self {
            IdealSpec::Full => Some(true),
            IdealSpec::FiniteSet(_) => None,
            IdealSpec::HookZ2 { rows, cols } => match coords {
                [r, c] => Some(r <= rows || c <= cols),
                _ => None,
            },
            IdealSpec::AxisRays(thickness) => {
                if coords.len() != thickness.len() {
                    return None;
                }
                Some(thickness.iter().enumerate().any(|(j, &t)| {
                    coords
                        .iter()
                        .enumerate()
                        .all(|(k, &x)| k == j || x <= t)
                }))
            }
        }
    }

    /// Coordinate dimension required, if any.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            IdealSpec::HookZ2 { .. } => Some(2),
            IdealSpec::AxisRays(t) => Some(t.len()),
            _ => None,
        }
    }

    /// The members of a window as a set.
    pub fn materialize(&self, poset: &Poset) -> Result<IdSet> {
        let mut set = IdSet::new(poset.len());
        for e in poset.elements() {
            if self.contains(e)? {
                set.insert(e.id);
            }
        }
        if let IdealSpec::FiniteSet(ids) = self {
            if let Some(&bad) = ids.iter().find(|&&id| id >= poset.len()) {
                return Err(Error::UnknownElement(bad));
            }
        }
        Ok(set)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
        match self {
            IdealSpec::Full => write!(f, "full"),
            IdealSpec::FiniteSet(ids) => write!(f, "set:{}", join(&mut ids.iter().map(|x| x.to_string()))),
            IdealSpec::HookZ2 { rows, cols } => write!(f, "hook:{rows},{cols}"),
            IdealSpec::AxisRays(t) => write!(f, "rays:{}", join(&mut t.iter().map(|x| x.to_string()))),
        }
    }
}

impl FromStr for IdealSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidIdealSpec(s.to_string());
        let s = s.trim();
        if s == "full" {
            return Ok(IdealSpec::Full);
        }
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = |ok_empty: bool| -> Result<Vec<u64>> {
            if args.is_empty() {
                return if ok_empty { Ok(vec![]) } else { Err(bad()) };
            }
            args.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "set" => Ok(IdealSpec::FiniteSet(nums(true)?.into_iter().map(|x| x as usize).collect())),
            "hook" => match nums(false)?[..] {
                [k, l] => Ok(IdealSpec::HookZ2 {
                    rows: u32::try_from(k).map_err(|_| bad())?,
                    cols: u32::try_from(l).map_err(|_| bad())?,
                }),
                _ => Err(bad()),
            },
            "rays" => nums(false)?
                .into_iter()
                .map(|x| u32::try_from(x).map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(IdealSpec::AxisRays),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, build_box_poset, build_young_poset};

    fn el(id: usize, coords: &[u32]) -> Element {
        Element {
            id,
            coords: Some(coords.to_vec()),
        }
    }

    #[test]
    fn hook_membership() {
        let first_row = IdealSpec::HookZ2 { rows: 1, cols: 0 };
        assert!(first_row.contains(&el(5, &[1, 5])).unwrap());
        assert!(!first_row.contains(&el(6, &[2, 1])).unwrap());
        let hook = IdealSpec::HookZ2 { rows: 1, cols: 1 };
        assert!(hook.contains(&el(6, &[2, 1])).unwrap());
        assert!(!hook.contains(&el(7, &[2, 2])).unwrap());
    }

    #[test]
    fn full_and_sets() {
        let bare = Element { id: 3, coords: None };
        assert!(IdealSpec::Full.contains(&bare).unwrap());
        assert!(IdealSpec::FiniteSet(vec![3]).contains(&bare).unwrap());
        assert!(!IdealSpec::FiniteSet(vec![1]).contains(&bare).unwrap());
        assert!(matches!(
            IdealSpec::HookZ2 { rows: 1, cols: 0 }.contains(&bare),
            Err(Error::MissingCoords { .. })
        ));
        assert!(matches!(
            IdealSpec::AxisRays(vec![1, 1, 1]).contains(&el(2, &[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rays_match_hooks_in_the_plane() {
        for (a1, a2) in [(0, 1), (2, 0), (1, 3)] {
            let rays = IdealSpec::AxisRays(vec![a1, a2]);
            let hook = IdealSpec::HookZ2 { rows: a2, cols: a1 };
            for r in 1..6 {
                for c in 1..6 {
                    assert_eq!(rays.contains_coords(&[r, c]), hook.contains_coords(&[r, c]));
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["full", "set:1,5,9", "hook:2,0", "rays:1,0,2", "set:"] {
            let spec: IdealSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        for s in ["hook:1", "rays:", "nope:1", "hook:a,b", ""] {
            assert!(s.parse::<IdealSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn specs_are_downward_closed_on_windows() {
        let windows = [
            build_young_poset(&[5, 4, 4, 2, 1]).unwrap(),
            build_box_poset(&[4, 5]).unwrap(),
            build_box_poset(&[3, 3, 3]).unwrap(),
            antichain(3).unwrap(),
        ];
        let specs = [
            IdealSpec::Full,
            IdealSpec::HookZ2 { rows: 1, cols: 0 },
            IdealSpec::HookZ2 { rows: 2, cols: 1 },
            IdealSpec::AxisRays(vec![1, 2]),
            IdealSpec::AxisRays(vec![1, 0, 2]),
            IdealSpec::FiniteSet(vec![0, 1]),
        ];
        for w in &windows {
            for spec in &specs {
                let Ok(set) = spec.materialize(&w.poset) else {
                    continue;
                };
                w.poset.check_ideal(&set).unwrap();
            }
        }
    }

    #[test]
    fn one_dimensional_specs_have_bounded_width() {
        // Widths stop growing once the window is large enough.
        let hook = IdealSpec::HookZ2 { rows: 2, cols: 1 };
        let rays = IdealSpec::AxisRays(vec![1, 1, 1]);
        let mut hook_widths = Vec::new();
        let mut ray_widths = Vec::new();
        for size in [4u32, 6, 8, 10] {
            let sq = build_box_poset(&[size, size]).unwrap();
            hook_widths.push(sq.poset.width_of(&hook.materialize(&sq.poset).unwrap()));
            let cube = build_box_poset(&[size.min(6); 3]).unwrap();
            ray_widths.push(cube.poset.width_of(&rays.materialize(&cube.poset).unwrap()));
        }
        assert!(hook_widths.iter().all(|&w| w == 3), "{hook_widths:?}");
        assert!(ray_widths.iter().all(|&w| w == 3), "{ray_widths:?}");
        // Full is not one-dimensional: its width keeps growing.
        let w4 = build_box_poset(&[4, 4]).unwrap();
        let w8 = build_box_poset(&[8, 8]).unwrap();
        let full = |w: &crate::PosetWindow| w.poset.width_of(&IdealSpec::Full.materialize(&w.poset).unwrap());
        assert!(full(&w8) > full(&w4));
    }
}
