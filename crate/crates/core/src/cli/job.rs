//! Job descriptions and their execution into JSON values.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, AlgebraGroup, Pattern, Subspace, DEFAULT_CAP};
use crate::chain::chain_compute;
use crate::characters::{exp_kirillov, kirillov, supercharacter, theta_lambda, xi, ClassFunction, XiReport};
use crate::duals::{orbit, power_exponent, Functional, OrbitKind};
use crate::error::{Error, Result};
use crate::exotic::{analyse_kappa, exotic_report, verify_technical};
use crate::scalars::{Cyclo, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Chain,
    Exotic,
    Verify,
    Kappa,
    Orbit,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    Theta,
    Kirillov,
    ExpKirillov,
    Superchar,
    Xi,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    /// Coefficients of the defining polynomial, constant term first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        match (self.q, self.p) {
            (Some(q), None) if self.e.is_none() => match &self.modulus {
                None => Field::from_order(q),
                Some(m) => {
                    let (p, e) = crate::scalars::prime_power(q)
                        .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
                    Field::new(p, e, Some(m))
                }
            },
            (None, Some(p)) => Field::new(p, self.e.unwrap_or(1), self.modulus.as_deref()),
            _ => Err(Error::InvalidInput("give either q, or p with optional e".into())),
        }
    }
}

/// One unit of work; every CLI subcommand is a thin wrapper building one of these.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Positions (i, j) of a closed pattern; the full upper triangle when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<[usize; 2]>>,
    /// Sparse entries [i, j, c] with c the integer code of a field element.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda: Vec<[u32; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<Which>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<OrbitKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
}

/// Output of a job: the JSON document and whether all checks passed.
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("missing required field {name}")))
}

/// Cyclotomic numbers as conductor plus exact rational coefficient strings.
pub fn cyclo_json(c: &Cyclo) -> Value {
    json!({
        "m": c.m(),
        "coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn entries_json(entries: &[((usize, usize), crate::scalars::Fe)]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|&((i, j), c)| json!([i, j, c.rep()]))
            .collect(),
    )
}

fn subspace_json(a: &Algebra, s: &Subspace) -> Value {
    let positions = a.positions();
    let zero: Vec<Value> = s
        .zero_coordinates()
        .iter()
        .map(|&k| json!([positions[k].0, positions[k].1]))
        .collect();
    let basis: Vec<Value> = s
        .basis()
        .iter()
        .map(|row| {
            let e: Vec<_> = positions
                .iter()
                .copied()
                .zip(row.iter().copied())
                .filter(|(_, c)| !c.is_zero())
                .collect();
            entries_json(&e)
        })
        .collect();
    json!({ "dim": s.dim(), "zero_positions": zero, "basis": basis })
}

impl JobSpec {
    fn algebra(&self, field: &Field) -> Result<Algebra> {
        let n = need(self.n, "n")?;
        if n < 1 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        match &self.pattern {
            None => Ok(Algebra::full(n, field.clone())),
            Some(ps) => Algebra::new(Pattern::new(n, ps.iter().map(|p| (p[0], p[1])))?, field.clone()),
        }
    }

    fn functional(&self, a: &Algebra) -> Result<Functional> {
        let f = a.field();
        let entries = self
            .lambda
            .iter()
            .map(|&[i, j, c]| Ok((i as usize, j as usize, f.elem(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Functional::from_entries(a, &entries)
    }

    fn cap(&self) -> u64 {
        self.cap.unwrap_or(DEFAULT_CAP)
    }

    pub fn execute(&self) -> Result<Outcome> {
        let field = self.field.build()?;
        let header = json!({ "command": self.command, "p": field.p(), "e": field.e(), "q": field.q() });
        let (body, passed) = match self.command {
            Command::Chain => (self.run_chain(&field)?, true),
            Command::Orbit => (self.run_orbit(&field)?, true),
            Command::Table => (self.run_table(&field)?, true),
            Command::Kappa => {
                let k = analyse_kappa(need(self.n, "n")?, &field, self.cap())?;
                (serde_json::to_value(&k.report).expect("report serializes"), true)
            }
            Command::Verify => {
                let rep = verify_technical(need(self.r, "r")?, &field)?;
                let passed = rep.passed;
                (serde_json::to_value(&rep).expect("report serializes"), passed)
            }
            Command::Exotic => {
                let r = need(self.r, "r")?;
                let rep = exotic_report(r, &field, self.n.unwrap_or(6 * r + 1))?;
                let passed = rep.passed;
                (serde_json::to_value(&rep).expect("report serializes"), passed)
            }
        };
        Ok(Outcome {
            value: json!({ "job": header, "result": body }),
            passed,
        })
    }

    fn run_chain(&self, field: &Field) -> Result<Value> {
        let a = self.algebra(field)?;
        let lambda = self.functional(&a)?;
        let c = chain_compute(&lambda);
        let rep = XiReport::from_chain(&c);
        Ok(json!({
            "n": a.n(),
            "dim": a.dim(),
            "lambda": entries_json(&lambda.entries()),
            "d": c.d,
            "l": c.l_list.iter().map(|s| subspace_json(&a, s)).collect::<Vec<_>>(),
            "s": c.s_list.iter().map(|s| subspace_json(&a, s)).collect::<Vec<_>>(),
            "xi": rep,
        }))
    }

    fn run_orbit(&self, field: &Field) -> Result<Value> {
        let a = self.algebra(field)?;
        let lambda = self.functional(&a)?;
        let kind = self.kind.unwrap_or(OrbitKind::Coadjoint);
        let g = AlgebraGroup::full(&a).with_cap(self.cap());
        let orb = orbit(&g, &lambda, kind)?;
        Ok(json!({
            "n": a.n(),
            "kind": kind,
            "size": orb.len(),
            "size_exponent": power_exponent(orb.len() as u128, field.q() as u128),
            "members": orb.iter().map(|m| entries_json(&m.entries())).collect::<Vec<_>>(),
        }))
    }

    fn run_table(&self, field: &Field) -> Result<Value> {
        let a = self.algebra(field)?;
        let lambda = self.functional(&a)?;
        let g = AlgebraGroup::full(&a).with_cap(self.cap());
        g.checked_size("value table")?;
        let which = self.which.unwrap_or(Which::Kirillov);
        let table: ClassFunction = match which {
            Which::Theta => theta_lambda(&g, &lambda)?,
            Which::Kirillov => kirillov(&g, &lambda)?,
            Which::ExpKirillov => exp_kirillov(&g, &lambda)?,
            Which::Superchar => supercharacter(&g, &lambda)?,
            Which::Xi => {
                let (_, tables) = xi(&g, &lambda)?;
                tables
                    .ok_or(Error::CapExceeded {
                        what: "ξ table",
                        needed: g.order().unwrap_or(u128::MAX),
                        cap: g.cap(),
                    })?
                    .induced
            }
        };
        let rows: Vec<Value> = g
            .elements()?
            .iter()
            .zip(table.values())
            .map(|(x, v)| json!({ "element": entries_json(&x.body().support()), "value": cyclo_json(v) }))
            .collect();
        Ok(json!({
            "n": a.n(),
            "which": which,
            "lambda": entries_json(&lambda.entries()),
            "order": rows.len(),
            "values": rows,
        }))
    }
}
