use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{Map, Value};

use super::unimodal::{max_rank, u_m_series_with, unimodal_bivariate, v_m_theta_series};
use crate::error::{Error, Result};
use crate::oracles::{rank_histogram, StatTable};
use crate::series::partition_series;

/// Which computation produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Bivariate,
    PerM,
    Theta,
    Oracle,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Bivariate, Route::PerM, Route::Theta, Route::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Bivariate => "bivariate",
            Route::PerM => "per-m",
            Route::Theta => "theta",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route {s:?}")))
    }
}

/// Rows `u(., n)` for `n = 0..=N` produced by a single route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodalTableSet {
    pub trunc_order: usize,
    pub route: Route,
    pub rows: Vec<StatTable>,
}

impl UnimodalTableSet {
    pub fn compute(route: Route, order: usize) -> Self {
        match route {
            Route::Bivariate => Self::bivariate(order),
            Route::PerM => Self::per_m(order),
            Route::Theta => Self::theta(order),
            Route::Oracle => Self::oracle(order),
        }
    }

    pub fn bivariate(order: usize) -> Self {
        let u = unimodal_bivariate(order);
        let rows = u
            .rows()
            .iter()
            .enumerate()
            .map(|(n, r)| StatTable {
                n,
                counts: r.clone(),
            })
            .collect();
        UnimodalTableSet {
            trunc_order: order,
            route: Route::Bivariate,
            rows,
        }
    }

    pub fn per_m(order: usize) -> Self {
        let p = partition_series(order);
        let columns: Vec<_> = (0..=max_rank(order))
            .into_par_iter()
            .map(|m| u_m_series_with(m, &p))
            .collect();
        Self::from_columns(order, Route::PerM, &columns)
    }

    pub fn theta(order: usize) -> Self {
        let p = partition_series(order);
        let columns: Vec<_> = (0..=max_rank(order))
            .into_par_iter()
            .map(|m| v_m_theta_series(m, order).mul(&p))
            .collect();
        Self::from_columns(order, Route::Theta, &columns)
    }

    /// Brute-force enumeration; row 0 is empty.
    pub fn oracle(order: usize) -> Self {
        let rows = (0..=order)
            .into_par_iter()
            .map(|n| {
                if n == 0 {
                    StatTable::new(0)
                } else {
                    rank_histogram(n as u32)
                }
            })
            .collect();
        UnimodalTableSet {
            trunc_order: order,
            route: Route::Oracle,
            rows,
        }
    }

    fn from_columns(order: usize, route: Route, columns: &[crate::series::TruncSeries]) -> Self {
        let mut rows: Vec<StatTable> = (0..=order).map(StatTable::new).collect();
        for (m, col) in columns.iter().enumerate() {
            for (n, c) in col.terms() {
                if m > 0 {
                    rows[n].add(-(m as i64), c.clone());
                }
                rows[n].add(m as i64, c.clone());
            }
        }
        UnimodalTableSet {
            trunc_order: order,
            route,
            rows,
        }
    }

    /// `u(m, n)`; `None` past the truncation order.
    pub fn get(&self, m: i64, n: usize) -> Option<BigInt> {
        self.rows.get(n).map(|r| r.get(m))
    }

    /// First `(m, n)` where the two sets differ on their common range.
    pub fn first_disagreement(&self, other: &UnimodalTableSet) -> Option<(i64, usize)> {
        let n_max = self.trunc_order.min(other.trunc_order);
        for n in 0..=n_max {
            let (a, b) = (&self.rows[n], &other.rows[n]);
            if a.counts != b.counts {
                let m = a
                    .counts
                    .keys()
                    .chain(b.counts.keys())
                    .find(|&&m| a.get(m) != b.get(m))
                    .copied()
                    .unwrap_or(0);
                return Some((m, n));
            }
        }
        None
    }

    /// `n m count` lines, zero cells omitted, ordered by `n` then `m`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            for (m, c) in &row.counts {
                s.push_str(&format!("{} {} {}\n", row.n, m, c));
            }
        }
        s
    }

    /// Parse the `n m count` format. The order is the largest `n` seen unless given.
    pub fn from_text(text: &str, route: Route, order: Option<usize>) -> Result<Self> {
        let mut triples = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [n, m, c] = fields[..] else {
                return Err(Error::Parse(format!("line {}: expected 3 fields", i + 1)));
            };
            let bad = |what: &str| Error::Parse(format!("line {}: bad {what}", i + 1));
            let n: usize = n.parse().map_err(|_| bad("n"))?;
            let m: i64 = m.parse().map_err(|_| bad("m"))?;
            let c: BigInt = c.parse().map_err(|_| bad("count"))?;
            triples.push((n, m, c));
        }
        let order = order.unwrap_or_else(|| triples.iter().map(|t| t.0).max().unwrap_or(0));
        let mut rows: Vec<StatTable> = (0..=order).map(StatTable::new).collect();
        for (n, m, c) in triples {
            let row = rows
                .get_mut(n)
                .ok_or_else(|| Error::Parse(format!("row {n} beyond order {order}")))?;
            row.add(m, c);
        }
        Ok(UnimodalTableSet {
            trunc_order: order,
            route,
            rows,
        })
    }

    /// `{"N": order, "rows": {"n": {"m": "count"}}}` with counts as decimal strings.
    pub fn to_json(&self) -> Value {
        let mut rows = Map::new();
        for row in &self.rows {
            let cells: Map<String, Value> = row
                .counts
                .iter()
                .map(|(m, c)| (m.to_string(), Value::String(c.to_string())))
                .collect();
            rows.insert(row.n.to_string(), Value::Object(cells));
        }
        let mut obj = Map::new();
        obj.insert("N".into(), Value::from(self.trunc_order));
        obj.insert("rows".into(), Value::Object(rows));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value, route: Route) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("json: {what}"));
        let order = value
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing N"))? as usize;
        let rows_obj = value
            .get("rows")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing rows"))?;
        let mut rows: Vec<StatTable> = (0..=order).map(StatTable::new).collect();
        for (n, cells) in rows_obj {
            let n: usize = n.parse().map_err(|_| bad("row key"))?;
            let row = rows.get_mut(n).ok_or_else(|| bad("row beyond N"))?;
            let cells = cells.as_object().ok_or_else(|| bad("row not an object"))?;
            for (m, c) in cells {
                let m: i64 = m.parse().map_err(|_| bad("m key"))?;
                let c: BigInt = c
                    .as_str()
                    .ok_or_else(|| bad("count not a string"))?
                    .parse()
                    .map_err(|_| bad("count"))?;
                row.add(m, c);
            }
        }
        Ok(UnimodalTableSet {
            trunc_order: order,
            route,
            rows,
        })
    }
}

/// `u_r(n)` (signed) or `u_r^+(n)` (absolute) for `n = 0..=N`.
pub fn unimodal_moments(tables: &UnimodalTableSet, r: u32, signed: bool) -> Vec<BigInt> {
    tables
        .rows
        .iter()
        .map(|row| {
            if signed && r % 2 == 1 {
                BigInt::zero()
            } else {
                row.moment(r, signed)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree_on_small_range() {
        let order = 20;
        let a = UnimodalTableSet::bivariate(order);
        for route in [Route::PerM, Route::Theta, Route::Oracle] {
            let b = UnimodalTableSet::compute(route, order);
            assert_eq!(a.first_disagreement(&b), None, "{route}");
        }
    }

    #[test]
    fn moments_examples() {
        let t = UnimodalTableSet::per_m(10);
        assert_eq!(unimodal_moments(&t, 0, true)[5], BigInt::from(6));
        assert!(unimodal_moments(&t, 1, true).iter().all(Zero::is_zero));
        assert_eq!(unimodal_moments(&t, 2, true)[6], BigInt::from(12));
        assert_eq!(unimodal_moments(&t, 2, false), unimodal_moments(&t, 2, true));
    }

    #[test]
    fn text_and_json_round_trip() {
        let t = UnimodalTableSet::per_m(30);
        let back = UnimodalTableSet::from_text(&t.to_text(), Route::PerM, Some(30)).unwrap();
        assert_eq!(back, t);
        let json = serde_json::to_string(&t.to_json()).unwrap();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(UnimodalTableSet::from_json(&v, Route::PerM).unwrap(), t);
    }

    #[test]
    fn text_format_lines() {
        let t = UnimodalTableSet::per_m(3);
        assert_eq!(t.to_text(), "1 0 1\n2 0 1\n3 -1 1\n3 0 1\n3 1 1\n");
        assert!(UnimodalTableSet::from_text("1 2", Route::PerM, None).is_err());
        assert!(UnimodalTableSet::from_text("1 0 x", Route::PerM, None).is_err());
    }

    #[test]
    fn route_names_parse() {
        for r in Route::ALL {
            assert_eq!(r.as_str().parse::<Route>().unwrap(), r);
        }
        assert!("fast".parse::<Route>().is_err());
    }
}
