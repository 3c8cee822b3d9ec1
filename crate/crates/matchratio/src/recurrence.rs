//! Size-profile recurrences for the chain families and their asymptotics.
//!
//! Each cataloged family satisfies a bivariate linear recurrence
//! S(G_n, k) = Σ a·S(G_{n−lag}, k−shift) over a fixed term list, seeded by
//! base profiles for the indexes below `n_min`. Extension is exact big-integer
//! arithmetic; every produced count is checked to be a nonnegative integer.
//!
//! The limiting average ratio comes from the characteristic polynomial of the
//! size-summed recurrence: with α_i = Σ_j a_{ij} and β_i = Σ_j j·a_{ij}, and
//! r the unique dominant simple real root of x^D − Σ α_i x^{D−i}, the limit
//! equals (Σ β_i r^{D−i}) / (c · Σ i·α_i r^{D−i}) where c = lim ν(G_n)/n —
//! provided the base profiles actually excite the dominant term, which the
//! base-condition check certifies.

use crate::error::{AnalysisError, CatalogError, EngineError, ExtendError, FamilyError, HypothesisError};
use crate::exact::{
    maximal_matching_profile_with_cap, profile_ratio, thorn_bipartite_profile, wheel_profile,
    SizeProfile, DEFAULT_VERTEX_CAP,
};
use crate::families::Family;
use crate::render::rational_to_f64;
use crate::roots::{residual, roots_monic};
use num::complex::Complex64;
use num::{BigInt, BigRational, Signed, ToPrimitive};

/// Relative modulus gap and imaginary-part tolerance for the dominant-root
/// certificate, and the floor below which the base condition is treated as
/// vanishing.
pub const HYPOTHESIS_TOLERANCE: f64 = 1e-9;

/// One recurrence term: S(G_n, k) gains `coeff · S(G_{n−lag}, k−shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub lag: usize,
    pub shift: usize,
    pub coeff: i64,
}

/// A family's recurrence: term list plus the base profiles for indexes
/// 0..n_min (n_min = bases.len()). Bases below `real_from` are conventional
/// seeds chosen so the recurrence reproduces every real member.
#[derive(Debug, Clone)]
pub struct RecurrenceSpec {
    pub family: Family,
    pub terms: Vec<Term>,
    pub bases: Vec<SizeProfile>,
    /// First index whose extended profile is the profile of a real member.
    pub real_from: u64,
    /// c = lim ν(G_n)/n.
    pub growth: BigRational,
    /// Exact expression for the limit in terms of the dominant root r, when
    /// one is known.
    pub closed_form: Option<&'static str>,
    pub notes: Option<&'static str>,
}

impl RecurrenceSpec {
    pub fn n_min(&self) -> usize {
        self.bases.len()
    }

    /// Recurrence depth D = max lag.
    pub fn depth(&self) -> usize {
        self.terms.iter().map(|t| t.lag).max().unwrap_or(0)
    }

    /// α_i = Σ_j a_{ij} for i = 1..=D (index 0 holds α_1).
    pub fn alpha(&self) -> Vec<i64> {
        let mut alpha = vec![0i64; self.depth()];
        for t in &self.terms {
            alpha[t.lag - 1] += t.coeff;
        }
        alpha
    }

    /// β_i = Σ_j j·a_{ij} for i = 1..=D.
    pub fn beta(&self) -> Vec<i64> {
        let mut beta = vec![0i64; self.depth()];
        for t in &self.terms {
            beta[t.lag - 1] += t.shift as i64 * t.coeff;
        }
        beta
    }

    /// Coefficients of x^D − Σ α_i x^{D−i} after the leading 1, highest
    /// power first.
    pub fn characteristic_tail(&self) -> Vec<f64> {
        self.alpha().iter().map(|&a| -(a as f64)).collect()
    }

    /// Extend the base profiles up to index `n_target` (inclusive). The
    /// returned vector is indexed by family index.
    pub fn extend(&self, n_target: u64) -> Result<Vec<SizeProfile>, ExtendError> {
        let n_target = n_target as usize;
        let mut profs: Vec<Vec<BigInt>> = self
            .bases
            .iter()
            .map(|p| p.counts().iter().map(|c| BigInt::from(c.clone())).collect())
            .collect();
        for n in self.n_min()..=n_target {
            let len = self
                .terms
                .iter()
                .map(|t| profs[n - t.lag].len() + t.shift)
                .max()
                .unwrap_or(0);
            let mut acc = vec![BigInt::from(0u32); len];
            for t in &self.terms {
                let coeff = BigInt::from(t.coeff);
                for (k, c) in profs[n - t.lag].iter().enumerate() {
                    acc[k + t.shift] += &coeff * c;
                }
            }
            for (k, c) in acc.iter().enumerate() {
                if c.is_negative() {
                    return Err(ExtendError::NegativeCount {
                        n,
                        k,
                        value: c.to_string(),
                    });
                }
            }
            profs.push(acc);
        }
        profs.truncate(n_target + 1);
        Ok(profs
            .into_iter()
            .map(|row| {
                SizeProfile::from_counts(
                    row.into_iter()
                        .map(|c| c.to_biguint().expect("counts checked nonnegative"))
                        .collect(),
                )
            })
            .collect())
    }

    /// P(1/r) = Σ_{i<n_min} r^{−i} (T0_i − Σ_{j≤min(i,D)} α_j T0_{i−j}):
    /// the coefficient sum certifying that the dominant root is excited by
    /// the base totals.
    pub fn base_condition(&self, root: f64) -> f64 {
        let alpha = self.alpha();
        let t0: Vec<f64> = self
            .bases
            .iter()
            .map(|p| p.t0().to_f64().unwrap_or(f64::MAX))
            .collect();
        let mut total = 0.0;
        for i in 0..self.n_min() {
            let mut s = t0[i];
            for j in 1..=i.min(self.depth()) {
                s -= alpha[j - 1] as f64 * t0[i - j];
            }
            total += s / root.powi(i as i32);
        }
        total
    }

    /// Certified limit of the average ratio along this family.
    pub fn asymptote(&self) -> Result<AsymptoticResult, HypothesisError> {
        let tail = self.characteristic_tail();
        let cert = dominant_root(&tail)?;
        let p = self.base_condition(cert.root);
        if p.abs() < HYPOTHESIS_TOLERANCE {
            return Err(HypothesisError::BaseConditionZero { value: p });
        }
        let r = cert.root;
        let d = self.depth();
        let (alpha, beta) = (self.alpha(), self.beta());
        let num: f64 = (1..=d).map(|i| beta[i - 1] as f64 * r.powi((d - i) as i32)).sum();
        let den: f64 = (1..=d)
            .map(|i| i as f64 * alpha[i - 1] as f64 * r.powi((d - i) as i32))
            .sum::<f64>()
            * rational_to_f64(&self.growth);
        Ok(AsymptoticResult {
            family: self.family.clone(),
            limit: num / den,
            growth: self.growth.clone(),
            closed_form: self.closed_form.map(str::to_string),
            method: AsymptoticMethod::DominantRoot(RootCertificate {
                depth: d,
                alpha,
                beta,
                root: r,
                gap: cert.gap,
                residual: cert.residual,
                base_condition: p,
                n_min: self.n_min(),
            }),
        })
    }
}

/// Dominant root with its certificate data.
#[derive(Debug, Clone)]
pub struct DominantRootCert {
    pub root: f64,
    /// Relative modulus gap to the second-largest root (1 if none).
    pub gap: f64,
    /// |p(r)| at the returned root.
    pub residual: f64,
    pub roots: Vec<Complex64>,
}

/// Locate the dominant characteristic root and certify it is simple, real,
/// and strictly larger in modulus than every other root.
pub fn dominant_root(tail: &[f64]) -> Result<DominantRootCert, HypothesisError> {
    let roots = roots_monic(tail);
    let Some(&r0) = roots.first() else {
        return Err(HypothesisError::NoRoots);
    };
    let m0 = r0.norm();
    if m0 == 0.0 {
        return Err(HypothesisError::NonUniqueDominantRoot { gap: 0.0 });
    }
    if r0.im.abs() > HYPOTHESIS_TOLERANCE * m0.max(1.0) {
        return Err(HypothesisError::ComplexDominantRoot { imag: r0.im.abs() });
    }
    let gap = if roots.len() > 1 {
        (m0 - roots[1].norm()) / m0
    } else {
        1.0
    };
    if gap < HYPOTHESIS_TOLERANCE {
        return Err(HypothesisError::NonUniqueDominantRoot { gap });
    }
    Ok(DominantRootCert {
        root: r0.re,
        gap,
        residual: residual(tail, r0),
        roots,
    })
}

/// Full data behind a dominant-root limit.
#[derive(Debug, Clone)]
pub struct RootCertificate {
    pub depth: usize,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub root: f64,
    pub gap: f64,
    pub residual: f64,
    pub base_condition: f64,
    pub n_min: usize,
}

/// How a family's limit was obtained.
#[derive(Debug, Clone)]
pub enum AsymptoticMethod {
    /// Recurrence catalog entry via the dominant-root formula.
    DominantRoot(RootCertificate),
    /// Wheels: maximal matchings are spoke + rim-path profiles, so the limit
    /// is the path limit; `root` is the path's dominant root.
    PathDelegate { root: f64 },
    /// Thorn complete bipartite graphs: ν grows with n while almost every
    /// maximal matching is near-perfect, so the ratio tends to exactly 1.
    ExactlyOne,
}

impl AsymptoticMethod {
    pub fn name(&self) -> &'static str {
        match self {
            AsymptoticMethod::DominantRoot(_) => "dominant-root",
            AsymptoticMethod::PathDelegate { .. } => "path-delegate",
            AsymptoticMethod::ExactlyOne => "exactly-one",
        }
    }
}

/// A certified family limit.
#[derive(Debug, Clone)]
pub struct AsymptoticResult {
    pub family: Family,
    pub limit: f64,
    pub growth: BigRational,
    pub closed_form: Option<String>,
    pub method: AsymptoticMethod,
}

fn literal(pairs: &[(usize, u128)]) -> SizeProfile {
    SizeProfile::from_pairs(pairs)
}

fn enumerated_base(family: &Family, n: u64) -> Result<SizeProfile, CatalogError> {
    let g = family.generate(n).map_err(|source| CatalogError::BaseConstruction {
        family: family.label(),
        source,
    })?;
    maximal_matching_profile_with_cap(&g, DEFAULT_VERTEX_CAP).map_err(|source| {
        CatalogError::BaseEnumeration {
            family: family.label(),
            index: n,
            source,
        }
    })
}

fn f2_i64(s: i64) -> i64 {
    crate::exact::clique_maximal_count(s)
        .to_i64()
        .expect("double factorial fits i64 for cataloged clique sizes")
}

fn clique_pendant_terms(s: i64) -> Vec<Term> {
    let mut merged: Vec<(usize, usize, i64)> = Vec::new();
    let mut add = |lag: usize, shift: usize, coeff: i64| {
        if coeff == 0 {
            return;
        }
        if let Some(t) = merged.iter_mut().find(|t| t.0 == lag && t.1 == shift) {
            t.2 += coeff;
        } else {
            merged.push((lag, shift, coeff));
        }
    };
    // Split on the anchor vertex of the last block: matched to its pendant
    // or inside the clique, matched across the link, or the link unused
    // while two blocks resolve internally.
    add(1, ((s + 1) / 2) as usize, f2_i64(s - 1));
    add(1, (s / 2) as usize, (s - 1) * f2_i64(s - 2));
    add(2, (2 * ((s - 1) / 2) + 1) as usize, f2_i64(s - 1).pow(2));
    merged.sort_unstable();
    merged
        .into_iter()
        .filter(|&(_, _, c)| c != 0)
        .map(|(lag, shift, coeff)| Term { lag, shift, coeff })
        .collect()
}

fn clique_link_terms(s: i64) -> Vec<Term> {
    let f = f2_i64(s - 2);
    let raw: Vec<(usize, usize, i64)> = if s % 2 == 1 {
        vec![
            (1, ((s - 1) / 2) as usize, (s + 1) * f),
            (2, (s - 1) as usize, -(s + 1) * f * f),
            (2, s as usize, f * f),
            (3, (3 * (s - 1) / 2) as usize, f * f * f),
        ]
    } else {
        let mut v = vec![(1usize, (s / 2) as usize, s * f)];
        if s > 2 {
            v.push((2, (s - 1) as usize, s * (s - 2) * f * f));
        }
        v.push((2, s as usize, -(s - 1) * f * f));
        v.push((3, ((3 * s - 2) / 2) as usize, (s - 1) * f * f * f));
        v
    };
    raw.into_iter()
        .filter(|&(_, _, c)| c != 0)
        .map(|(lag, shift, coeff)| Term { lag, shift, coeff })
        .collect()
}

fn terms(list: &[(usize, usize, i64)]) -> Vec<Term> {
    list.iter()
        .map(|&(lag, shift, coeff)| Term { lag, shift, coeff })
        .collect()
}

/// The recurrence catalog entry for a family, with bases enumerated from the
/// real small members wherever one exists.
pub fn family_recurrence(family: &Family) -> Result<RecurrenceSpec, CatalogError> {
    let spec = match *family {
        Family::Path => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(2, 1, 1), (3, 1, 1)]),
            bases: vec![
                enumerated_base(family, 0)?,
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
            ],
            real_from: 0,
            growth: BigRational::new(BigInt::from(1), BigInt::from(2)),
            closed_form: Some("(2r + 2)/(2r + 3) with r^3 = r + 1"),
            notes: None,
        },
        Family::Cycle => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(2, 1, 1), (3, 1, 1)]),
            bases: vec![literal(&[(0, 3)]), SizeProfile::zero(), literal(&[(1, 2)])],
            real_from: 3,
            growth: BigRational::new(BigInt::from(1), BigInt::from(2)),
            closed_form: Some("(2r + 2)/(2r + 3) with r^3 = r + 1"),
            notes: Some("bases at n = 0, 1, 2 are conventional seeds; members are real from n = 3"),
        },
        Family::ThornPath => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 1), (2, 1, 1)]),
            bases: vec![enumerated_base(family, 0)?, enumerated_base(family, 1)?],
            real_from: 0,
            growth: BigRational::from_integer(BigInt::from(1)),
            closed_form: Some("(5 + sqrt(5))/10"),
            notes: None,
        },
        Family::ThornCycle => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 1), (2, 1, 1)]),
            bases: vec![literal(&[(0, 2)]), literal(&[(1, 1)])],
            real_from: 3,
            growth: BigRational::from_integer(BigInt::from(1)),
            closed_form: Some("(5 + sqrt(5))/10"),
            notes: Some("bases at n = 0, 1 are conventional seeds; members are real from n = 3"),
        },
        Family::HexagonChain { s } => {
            let t: &[(usize, usize, i64)] = match s {
                1 => &[
                    (1, 2, 4),
                    (1, 3, 3),
                    (2, 4, -4),
                    (2, 5, 3),
                    (2, 6, -2),
                    (3, 6, 1),
                    (3, 7, -2),
                    (3, 8, 2),
                ],
                2 => &[(1, 2, 5), (1, 3, 2), (2, 4, -7), (2, 5, 5), (3, 6, 2)],
                3 => &[(1, 2, 2), (1, 3, 3), (2, 4, 2), (2, 5, 8), (2, 6, -2), (3, 7, 4)],
                _ => unreachable!("validated parameter"),
            };
            RecurrenceSpec {
                family: family.clone(),
                terms: terms(t),
                bases: vec![
                    literal(&[(0, 1)]),
                    enumerated_base(family, 1)?,
                    enumerated_base(family, 2)?,
                ],
                real_from: 1,
                growth: BigRational::from_integer(BigInt::from(3)),
                closed_form: None,
                notes: Some("base at n = 0 is the empty chain"),
            }
        }
        Family::C4Chain { s } => {
            let (t, bases): (&[(usize, usize, i64)], Vec<SizeProfile>) = match s {
                1 => (
                    &[(1, 2, 3), (2, 3, 3), (2, 4, -2), (3, 5, 2)],
                    vec![
                        literal(&[(0, 1)]),
                        enumerated_base(family, 1)?,
                        enumerated_base(family, 2)?,
                    ],
                ),
                2 => (
                    &[(1, 1, 1), (1, 2, 2), (2, 3, 2)],
                    vec![literal(&[(0, 1)]), enumerated_base(family, 1)?],
                ),
                _ => unreachable!("validated parameter"),
            };
            RecurrenceSpec {
                family: family.clone(),
                terms: terms(t),
                bases,
                real_from: 1,
                growth: BigRational::from_integer(BigInt::from(2)),
                closed_form: if s == 2 { Some("(51 + sqrt(17))/68") } else { None },
                notes: Some("base at n = 0 is the empty chain"),
            }
        }
        Family::TriangleChain => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 2), (2, 1, 1), (2, 2, -1), (3, 2, 1)]),
            bases: vec![
                literal(&[(0, 1)]),
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
            ],
            real_from: 1,
            growth: BigRational::from_integer(BigInt::from(1)),
            closed_form: None,
            notes: Some("base at n = 0 is the bare shared spine vertex"),
        },
        Family::CliquePendantChain { s } => RecurrenceSpec {
            family: family.clone(),
            terms: clique_pendant_terms(s as i64),
            bases: vec![literal(&[(0, 1)]), enumerated_base(family, 1)?],
            real_from: 1,
            growth: family.growth(),
            closed_form: match s {
                1 => Some("(5 + sqrt(5))/10"),
                2 => Some("(2 + sqrt(2))/4"),
                3 => Some("(39 - sqrt(13))/52"),
                _ => None,
            },
            notes: Some("base at n = 0 is the empty chain"),
        },
        Family::CliqueLinkChain { s } => RecurrenceSpec {
            family: family.clone(),
            terms: clique_link_terms(s as i64),
            bases: vec![
                literal(&[(0, 1)]),
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
            ],
            real_from: 1,
            growth: family.growth(),
            closed_form: if s == 2 {
                Some("(2r + 2)/(2r + 3) with r^3 = r + 1")
            } else {
                None
            },
            notes: Some("base at n = 0 is the empty chain"),
        },
        Family::Ladder => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 2), (3, 2, 1), (3, 3, -1), (4, 3, 1), (5, 4, 1)]),
            bases: vec![
                literal(&[(0, 1)]),
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
                enumerated_base(family, 3)?,
                enumerated_base(family, 4)?,
            ],
            real_from: 1,
            growth: BigRational::from_integer(BigInt::from(1)),
            closed_form: None,
            notes: Some("base at n = 0 is the empty chain"),
        },
        Family::ThornLadder => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 2), (1, 2, 1), (2, 3, 1), (3, 3, -1)]),
            bases: vec![
                literal(&[(0, 1)]),
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
            ],
            real_from: 1,
            growth: BigRational::from_integer(BigInt::from(2)),
            closed_form: None,
            notes: Some("base at n = 0 is the empty chain"),
        },
        Family::CaterpillarTree => RecurrenceSpec {
            family: family.clone(),
            terms: terms(&[(1, 1, 2), (1, 2, 1), (2, 2, -1), (2, 3, 1)]),
            bases: vec![
                SizeProfile::zero(),
                enumerated_base(family, 1)?,
                enumerated_base(family, 2)?,
            ],
            real_from: 1,
            growth: BigRational::from_integer(BigInt::from(2)),
            closed_form: Some("13/18"),
            notes: Some("base at n = 0 is the zero profile (no member exists there)"),
        },
        Family::Wheel
        | Family::Complete
        | Family::CompleteBipartite { .. }
        | Family::ThornComplete
        | Family::ThornCompleteBipartite { .. } => {
            return Err(CatalogError::NoRecurrence(family.label()))
        }
    };
    Ok(spec)
}

/// The certified limit of I along a family, by whichever method applies.
pub fn family_asymptote(family: &Family) -> Result<AsymptoticResult, AnalysisError> {
    match family {
        Family::Wheel => {
            let path = family_recurrence(&Family::Path)?.asymptote()?;
            let root = match &path.method {
                AsymptoticMethod::DominantRoot(cert) => cert.root,
                _ => unreachable!("path uses the dominant-root method"),
            };
            Ok(AsymptoticResult {
                family: family.clone(),
                limit: path.limit,
                growth: family.growth(),
                closed_form: path.closed_form,
                method: AsymptoticMethod::PathDelegate { root },
            })
        }
        Family::ThornCompleteBipartite { .. } => Ok(AsymptoticResult {
            family: family.clone(),
            limit: 1.0,
            growth: family.growth(),
            closed_form: Some("1".to_string()),
            method: AsymptoticMethod::ExactlyOne,
        }),
        _ => Ok(family_recurrence(family)?.asymptote()?),
    }
}

/// Families with a certified asymptote, in catalog order.
pub fn standard_catalog() -> Vec<Family> {
    let mut list = vec![
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::ThornPath,
        Family::ThornCycle,
    ];
    list.extend((1..=3).map(|s| Family::HexagonChain { s }));
    list.extend((1..=2).map(|s| Family::C4Chain { s }));
    list.push(Family::TriangleChain);
    list.extend((1..=5).map(|s| Family::CliquePendantChain { s }));
    list.extend((2..=5).map(|s| Family::CliqueLinkChain { s }));
    list.extend([
        Family::Ladder,
        Family::ThornLadder,
        Family::CaterpillarTree,
        Family::ThornCompleteBipartite { c: 1 },
    ]);
    list
}

/// Exact profiles of the real members with index ≤ `n_max`, by recurrence
/// extension or closed form. Returns `(start, profiles)` where `profiles[i]`
/// is the profile of member `start + i`.
pub fn family_profiles(family: &Family, n_max: u64) -> Result<(u64, Vec<SizeProfile>), AnalysisError> {
    match family {
        Family::Wheel => {
            let profs = (4..=n_max)
                .map(|n| wheel_profile(n as usize))
                .collect::<Result<Vec<_>, EngineError>>()?;
            Ok((4, profs))
        }
        Family::ThornCompleteBipartite { c } => {
            let profs = (1..=n_max)
                .map(|n| thorn_bipartite_profile(*c as usize, n as usize))
                .collect();
            Ok((1, profs))
        }
        _ => {
            let spec = family_recurrence(family)?;
            let start = spec.real_from.max(family.min_index());
            let all = spec.extend(n_max)?;
            Ok((start, all.into_iter().skip(start as usize).collect()))
        }
    }
}

/// One convergence-table row.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub n: u64,
    pub nu: u64,
    pub ratio: BigRational,
    pub value: f64,
    /// |value − limit|.
    pub gap: f64,
}

/// Exact finite ratios along a family against its certified limit.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub family: Family,
    pub limit: f64,
    pub rows: Vec<ConvergenceRow>,
    /// Whether the gap is non-increasing along the printed rows.
    pub gap_monotone: bool,
}

/// Tabulate I(G_n) for every real member up to `n_max` next to the limit.
/// Errors if `n_max` is below the family's first real index.
pub fn convergence(family: &Family, n_max: u64) -> Result<ConvergenceReport, AnalysisError> {
    let asym = family_asymptote(family)?;
    let (start, profs) = family_profiles(family, n_max)?;
    if n_max < start {
        return Err(AnalysisError::Family(FamilyError::IndexBelowMinimum {
            family: family.name(),
            index: n_max,
            min: start,
        }));
    }
    let rows: Vec<ConvergenceRow> = profs
        .iter()
        .enumerate()
        .map(|(off, p)| {
            let n = start + off as u64;
            let nu = family.matching_number(n);
            let ratio = profile_ratio(p, nu);
            let value = rational_to_f64(&ratio);
            ConvergenceRow {
                n,
                nu,
                ratio,
                value,
                gap: (value - asym.limit).abs(),
            }
        })
        .collect();
    let gap_monotone = rows.windows(2).all(|w| w[1].gap <= w[0].gap);
    Ok(ConvergenceReport {
        family: family.clone(),
        limit: asym.limit,
        rows,
        gap_monotone,
    })
}

/// One verification row: recurrence-extended profile vs. brute enumeration.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub n: u64,
    pub order: usize,
    pub expected: SizeProfile,
    pub enumerated: SizeProfile,
    pub nu_formula: u64,
    pub matches: bool,
}

/// Outcome of cross-validating a family's profiles against enumeration.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub family: Family,
    pub rows: Vec<VerifyRow>,
    pub mismatches: usize,
}

/// Compare one member's recurrence-extended (or closed-form) profile with
/// brute-force enumeration, and the enumeration's ν with the family formula.
pub fn verify_member(
    family: &Family,
    n: u64,
    expected: &SizeProfile,
    cap: usize,
) -> Result<VerifyRow, AnalysisError> {
    let g = family.generate(n).map_err(AnalysisError::Family)?;
    let enumerated = maximal_matching_profile_with_cap(&g, cap).map_err(AnalysisError::Engine)?;
    let nu_formula = family.matching_number(n);
    let matches = *expected == enumerated && enumerated.max_size() as u64 == nu_formula;
    Ok(VerifyRow {
        n,
        order: g.order(),
        expected: expected.clone(),
        enumerated,
        nu_formula,
        matches,
    })
}

/// Compare recurrence-extended (or closed-form) profiles with brute-force
/// enumeration of the real members with index in `n_from..=n_to` (clamped
/// below to the first real index), and ν with the family formula.
pub fn verify_family(
    family: &Family,
    n_from: u64,
    n_to: u64,
    cap: usize,
) -> Result<VerifyReport, AnalysisError> {
    let (start, profs) = family_profiles(family, n_to)?;
    let begin = start.max(n_from);
    if n_to < begin {
        return Err(AnalysisError::Family(FamilyError::IndexBelowMinimum {
            family: family.name(),
            index: n_to,
            min: begin,
        }));
    }
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for n in begin..=n_to {
        let row = verify_member(family, n, &profs[(n - start) as usize], cap)?;
        if !row.matches {
            mismatches += 1;
        }
        rows.push(row);
    }
    Ok(VerifyReport {
        family: family.clone(),
        rows,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    fn spec(f: &Family) -> RecurrenceSpec {
        family_recurrence(f).unwrap()
    }

    #[test]
    fn alpha_beta_of_path() {
        let s = spec(&Family::Path);
        assert_eq!(s.depth(), 3);
        assert_eq!(s.alpha(), vec![0, 1, 1]);
        assert_eq!(s.beta(), vec![0, 1, 1]);
        assert_eq!(s.n_min(), 3);
    }

    #[test]
    fn clique_terms_match_hand_expansion() {
        // s = 2 merges the two depth-1 splits onto the same (lag, shift) cell.
        assert_eq!(
            clique_pendant_terms(2),
            vec![Term { lag: 1, shift: 1, coeff: 2 }, Term { lag: 2, shift: 1, coeff: 1 }]
        );
        let s5 = spec(&Family::CliquePendantChain { s: 5 });
        assert_eq!(s5.alpha(), vec![15, 9]);
        assert_eq!(s5.beta(), vec![33, 45]);
        let l4 = spec(&Family::CliqueLinkChain { s: 4 });
        assert_eq!(l4.alpha(), vec![4, 5, 3]);
        assert_eq!(l4.beta(), vec![8, 12, 15]);
        let l5 = spec(&Family::CliqueLinkChain { s: 5 });
        assert_eq!(l5.alpha(), vec![18, -45, 27]);
        assert_eq!(l5.beta(), vec![36, -171, 162]);
    }

    #[test]
    fn extension_reproduces_enumeration_for_paths() {
        let s = spec(&Family::Path);
        let profs = s.extend(9).unwrap();
        for n in 0..=9u64 {
            let g = Family::Path.generate(n).unwrap();
            let direct = maximal_matching_profile_with_cap(&g, DEFAULT_VERTEX_CAP).unwrap();
            assert_eq!(profs[n as usize], direct, "P_{n}");
        }
    }

    #[test]
    fn conventional_cycle_bases_reproduce_real_members() {
        let s = spec(&Family::Cycle);
        let profs = s.extend(9).unwrap();
        for n in 3..=9u64 {
            let g = Family::Cycle.generate(n).unwrap();
            let direct = maximal_matching_profile_with_cap(&g, DEFAULT_VERTEX_CAP).unwrap();
            assert_eq!(profs[n as usize], direct, "C_{n}");
        }
    }

    #[test]
    fn dominant_root_certificates() {
        // path: x^3 − x − 1, the plastic polynomial
        let cert = dominant_root(&[0.0, -1.0, -1.0]).unwrap();
        assert!((cert.root - 1.324_717_957_244_746).abs() < 1e-12);
        assert!(cert.gap > 0.3);
        assert!(cert.residual < 1e-12);
        // x^2 − 1 has two roots of equal modulus
        assert!(matches!(
            dominant_root(&[0.0, -1.0]),
            Err(HypothesisError::NonUniqueDominantRoot { .. })
        ));
        // x^2 + 1 has a complex dominant pair
        assert!(matches!(
            dominant_root(&[0.0, 1.0]),
            Err(HypothesisError::ComplexDominantRoot { .. })
        ));
        assert!(matches!(dominant_root(&[]), Err(HypothesisError::NoRoots)));
    }

    #[test]
    fn path_limit_and_base_condition() {
        let s = spec(&Family::Path);
        let a = s.asymptote().unwrap();
        assert!((a.limit - 0.822_991_177_325_291).abs() < 1e-12);
        match &a.method {
            AsymptoticMethod::DominantRoot(cert) => {
                // P = 1 + 1/r for open paths
                assert!((cert.base_condition - (1.0 + 1.0 / cert.root)).abs() < 1e-12);
            }
            _ => panic!("path must use the dominant-root method"),
        }
    }

    #[test]
    fn cycle_base_condition_is_three_minus_inverse_square() {
        let s = spec(&Family::Cycle);
        let a = s.asymptote().unwrap();
        match &a.method {
            AsymptoticMethod::DominantRoot(cert) => {
                assert!((cert.base_condition - (3.0 - 1.0 / (cert.root * cert.root))).abs() < 1e-12);
            }
            _ => panic!("cycle must use the dominant-root method"),
        }
        assert!((a.limit - 0.822_991_177_325_291).abs() < 1e-12);
    }

    #[test]
    fn frozen_limits_for_every_catalog_family() {
        // Limits pinned from exact 200-term extensions; disagreements here
        // mean the catalog drifted.
        let frozen: &[(Family, f64)] = &[
            (Family::Path, 0.822_991_177_325_291),
            (Family::Cycle, 0.822_991_177_325_291),
            (Family::Wheel, 0.822_991_177_325_291),
            (Family::ThornPath, 0.723_606_797_749_979),
            (Family::ThornCycle, 0.723_606_797_749_979),
            (Family::HexagonChain { s: 1 }, 0.823_379_686_562_203),
            (Family::HexagonChain { s: 2 }, 0.806_393_620_506_937),
            (Family::HexagonChain { s: 3 }, 0.825_710_899_919_310),
            (Family::C4Chain { s: 1 }, 0.873_151_868_127_629),
            (Family::C4Chain { s: 2 }, 0.810_633_906_259_083),
            (Family::TriangleChain, 0.748_169_452_386_933),
            (Family::CliquePendantChain { s: 1 }, 0.723_606_797_749_979),
            (Family::CliquePendantChain { s: 2 }, 0.853_553_390_593_274),
            (Family::CliquePendantChain { s: 3 }, 0.680_662_475_471_846),
            (Family::CliquePendantChain { s: 4 }, 0.926_776_695_296_637),
            (Family::CliquePendantChain { s: 5 }, 0.740_485_664_244_807),
            (Family::CliqueLinkChain { s: 2 }, 0.822_991_177_325_291),
            (Family::CliqueLinkChain { s: 3 }, 0.755_029_938_633_934),
            (Family::CliqueLinkChain { s: 4 }, 0.866_437_474_385_057),
            (Family::CliqueLinkChain { s: 5 }, 0.819_150_034_499_308),
            (Family::Ladder, 0.861_798_516_909_855),
            (Family::ThornLadder, 0.696_753_644_607_556),
            (Family::CaterpillarTree, 13.0 / 18.0),
            (Family::ThornCompleteBipartite { c: 1 }, 1.0),
        ];
        assert_eq!(frozen.len(), standard_catalog().len());
        for (fam, expected) in frozen {
            let a = family_asymptote(fam).unwrap();
            assert!(
                (a.limit - expected).abs() < 1e-11,
                "{fam}: got {:.15}, pinned {:.15}",
                a.limit,
                expected
            );
        }
    }

    #[test]
    fn caterpillar_root_is_exactly_three() {
        let s = spec(&Family::CaterpillarTree);
        let a = s.asymptote().unwrap();
        match &a.method {
            AsymptoticMethod::DominantRoot(cert) => {
                assert!((cert.root - 3.0).abs() < 1e-12);
                assert!(cert.gap > 0.99, "second root is 0");
            }
            _ => panic!(),
        }
        assert!((a.limit - 13.0 / 18.0).abs() < 1e-13);
    }

    #[test]
    fn non_catalog_families_report_no_recurrence() {
        for fam in [
            Family::Complete,
            Family::CompleteBipartite { c: 2 },
            Family::ThornComplete,
            Family::Wheel,
        ] {
            assert!(matches!(
                family_recurrence(&fam),
                Err(CatalogError::NoRecurrence(_))
            ));
        }
        assert!(matches!(
            family_asymptote(&Family::Complete),
            Err(AnalysisError::Catalog(CatalogError::NoRecurrence(_)))
        ));
    }

    #[test]
    fn wheel_delegates_to_path() {
        let a = family_asymptote(&Family::Wheel).unwrap();
        assert!(matches!(a.method, AsymptoticMethod::PathDelegate { .. }));
        assert!((a.limit - 0.822_991_177_325_291).abs() < 1e-12);
    }

    #[test]
    fn convergence_reports_gaps_against_limit() {
        let rep = convergence(&Family::ThornPath, 60).unwrap();
        assert_eq!(rep.rows.first().unwrap().n, 0);
        assert_eq!(rep.rows.last().unwrap().n, 60);
        let last = rep.rows.last().unwrap();
        assert!(last.gap < 3e-3, "gap at n=60 is small, got {}", last.gap);
        // exact rational at n = 2: thorn(P2) = P4 has I = 3/4
        let row2 = &rep.rows[2];
        assert_eq!(row2.ratio, BigRational::new(BigInt::from(3), BigInt::from(4)));
    }

    #[test]
    fn convergence_rejects_n_max_below_first_member() {
        assert!(matches!(
            convergence(&Family::Cycle, 2),
            Err(AnalysisError::Family(FamilyError::IndexBelowMinimum { .. }))
        ));
        assert!(matches!(
            convergence(&Family::Wheel, 3),
            Err(AnalysisError::Family(FamilyError::IndexBelowMinimum { .. }))
        ));
    }

    #[test]
    fn verify_family_cross_checks_enumeration() {
        let rep = verify_family(&Family::TriangleChain, 1, 6, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(rep.mismatches, 0);
        assert_eq!(rep.rows.len(), 6);
        assert!(rep.rows.iter().all(|r| r.matches));
        // wheels verify against the closed-form profile
        let wrep = verify_family(&Family::Wheel, 4, 10, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(wrep.mismatches, 0);
        // a sub-range skips the earlier members
        let sub = verify_family(&Family::Path, 5, 8, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(sub.rows.first().unwrap().n, 5);
        assert_eq!(sub.rows.len(), 4);
    }

    #[test]
    fn verify_family_respects_the_cap() {
        assert!(matches!(
            verify_family(&Family::HexagonChain { s: 1 }, 1, 5, 12),
            Err(AnalysisError::Engine(EngineError::CapExceeded { .. }))
        ));
        assert!(matches!(
            verify_family(&Family::Cycle, 10, 5, DEFAULT_VERTEX_CAP),
            Err(AnalysisError::Family(FamilyError::IndexBelowMinimum { .. }))
        ));
    }

    #[test]
    fn extension_never_produces_negatives_on_catalog() {
        for fam in standard_catalog() {
            if let Ok(spec) = family_recurrence(&fam) {
                let profs = spec.extend(40).unwrap();
                for n in spec.real_from..=40 {
                    assert!(!profs[n as usize].t0().is_zero(), "{fam} n={n}");
                }
            }
        }
    }
}
