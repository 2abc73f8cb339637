use std::collections::BTreeMap;

use crate::kernel::{Circuit, Gate};

use super::{Family, OracleSpec};

/// One catalog entry with its Toffoli/CNOT cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub oracle: OracleSpec,
    pub toffolis: usize,
    pub cnots: usize,
}

impl CatalogEntry {
    pub fn function_string(&self) -> String {
        self.oracle.function_string()
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.function(), 0x00 | 0xff)
    }

    pub fn function(&self) -> u8 {
        match self.oracle.family {
            Family::Dj3Catalog { function } => function,
            _ => unreachable!("catalog entries carry their function"),
        }
    }
}

/// Template: optional Toffoli on literals `(x_i ⊕ [k→i] ⊕ a)(x_j ⊕ [k→j] ⊕ b)`,
/// plus CNOTs from the query wires in `direct`, plus a constant.
#[derive(Clone, Copy)]
struct Template {
    toffoli: Option<Product>,
    direct: u8,
    constant: bool,
}

#[derive(Clone, Copy)]
struct Product {
    i: usize,
    j: usize,
    k: usize,
    fold_i: bool,
    fold_j: bool,
    inv_i: bool,
    inv_j: bool,
}

impl Template {
    fn cost(&self) -> (usize, usize) {
        let folds = self.toffoli.map_or(0, |p| 2 * (p.fold_i as usize + p.fold_j as usize));
        (self.toffoli.is_some() as usize, folds + self.direct.count_ones() as usize)
    }

    fn eval(&self, x: u8) -> bool {
        let bit = |w: usize| x >> w & 1 == 1;
        let mut v = self.constant ^ ((self.direct & x).count_ones() & 1 == 1);
        if let Some(p) = self.toffoli {
            let li = bit(p.i) ^ (p.fold_i && bit(p.k)) ^ p.inv_i;
            let lj = bit(p.j) ^ (p.fold_j && bit(p.k)) ^ p.inv_j;
            v ^= li && lj;
        }
        v
    }

    fn function(&self) -> u8 {
        (0..8).fold(0u8, |acc, x| acc | (self.eval(x) as u8) << x)
    }

    fn circuit(&self) -> Circuit {
        let t = 3;
        let mut c = Circuit::new(4);
        if self.constant {
            c.add(Gate::X(t));
        }
        if let Some(p) = self.toffoli {
            let mut pre = Circuit::new(4);
            if p.fold_i {
                pre.add(Gate::cnot(p.k, p.i));
            }
            if p.fold_j {
                pre.add(Gate::cnot(p.k, p.j));
            }
            if p.inv_i {
                pre.add(Gate::X(p.i));
            }
            if p.inv_j {
                pre.add(Gate::X(p.j));
            }
            c.append(&pre).expect("same width");
            c.add(Gate::toffoli(p.i, p.j, t));
            c.append(&pre.inverse()).expect("same width");
        }
        for w in (0..3).filter(|w| self.direct >> w & 1 == 1) {
            c.add(Gate::cnot(w, t));
        }
        c
    }
}

fn templates() -> Vec<Template> {
    let mut out = vec![];
    for direct in 0..8u8 {
        for constant in [false, true] {
            out.push(Template { toffoli: None, direct, constant });
            for (i, j, k) in [(2, 1, 0), (2, 0, 1), (1, 0, 2)] {
                for bits in 0..16u8 {
                    let product = Product {
                        i,
                        j,
                        k,
                        fold_i: bits & 1 != 0,
                        fold_j: bits & 2 != 0,
                        inv_i: bits & 4 != 0,
                        inv_j: bits & 8 != 0,
                    };
                    out.push(Template { toffoli: Some(product), direct, constant });
                }
            }
        }
    }
    out
}

/// All 72 constant and balanced functions of three bits, each with a
/// cheapest circuit from the template family (fewest Toffolis, then fewest
/// CNOTs). Ordered by cost group, then by function string.
pub fn dj3_catalog() -> Vec<CatalogEntry> {
    let mut best: BTreeMap<u8, (usize, usize, Template)> = BTreeMap::new();
    for tpl in templates() {
        let f = tpl.function();
        if !matches!(f.count_ones(), 0 | 4 | 8) {
            continue;
        }
        let (t, c) = tpl.cost();
        match best.get(&f) {
            Some(&(bt, bc, _)) if (bt, bc) <= (t, c) => {}
            _ => {
                best.insert(f, (t, c, tpl));
            }
        }
    }
    let mut entries: Vec<CatalogEntry> = best
        .into_iter()
        .map(|(function, (toffolis, cnots, tpl))| CatalogEntry {
            oracle: OracleSpec {
                family: Family::Dj3Catalog { function },
                circuit: tpl.circuit(),
                query: vec![0, 1, 2],
                answer: vec![3],
                ancillas: vec![],
            },
            toffolis,
            cnots,
        })
        .collect();
    entries.sort_by_key(|e| (e.toffolis, e.cnots, e.function_string()));
    entries
}
