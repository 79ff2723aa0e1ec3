//! Certificates that an initial ideal is squarefree, the Gröbner
//! deformation check, and the graded F-splitting verdict.
//!
//! A [`Certificate`] stores its inputs as text together with a list of
//! checks. [`Certificate::replay`] parses the inputs again and recomputes
//! every check from scratch, so nothing recorded by the producer is
//! trusted.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{corner_monomial, fedder_colon, in_frobenius_maximal};
use crate::groebner::IdealPresentation;
use crate::ideal_ops::{dehomogenize, homogenize_w, intersect, symbolic_power_prime};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::parse::{parse_monomial, parse_polynomial};
use crate::poly::{DisplayMonomial, Polynomial};
use crate::ring::Ring;

pub const SQUAREFREE_LEMMA: &str =
    "a monomial ideal contains a squarefree monomial iff one of its minimal generators is squarefree";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    CharP,
    Symb,
    Deformation,
    FSplit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub p: u64,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSpec {
    pub generators: Vec<String>,
    pub witness: String,
}

/// One recomputable claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    /// The reduced basis of `I^[p] : I`.
    FedderColonBasis { basis: Vec<String> },
    /// `element ∈ I^[p] : I` and `multiplier · element` has leading
    /// monomial `X_1^(p−1)⋯X_n^(p−1)`.
    CornerWitness { element: String, multiplier: String },
    /// The minimal generators of in(I), all squarefree.
    InitialIdealSquarefree { generators: Vec<String> },
    /// The witness of prime `prime` (0-based) lies outside it.
    WitnessOutsidePrime { prime: usize, witness: String },
    /// ht P = n − dim S/in(P).
    PrimeHeight { prime: usize, initial: Vec<String>, dimension: usize, height: usize },
    /// h = max of the prime heights.
    MaxHeight { height: usize },
    /// The reduced basis of ∩ P_i.
    IntersectionBasis { basis: Vec<String> },
    /// The reduced basis of ∩ (P_i^h : g_i^∞).
    SymbolicPowerBasis { height: usize, basis: Vec<String> },
    /// A basis element of the symbolic power with squarefree leading monomial.
    SquarefreeMinimalGenerator { element: String, monomial: String, lemma: String },
    /// Generators of hom_w(I) in S[t].
    HomogenizedBasis { vars: Vec<String>, generators: Vec<String> },
    /// Each generator of hom_w(I) is homogeneous for (w, 1).
    WeightHomogeneous,
    /// hom_w(I) at t = 0 equals the ideal of these initial forms.
    SpecialFiber { initial_forms: Vec<String> },
    /// hom_w(I) at t = 1 equals I.
    GeneralFiber,
    /// This basis element of `I^[p] : I` lies outside `m^[p]`.
    ColonOutsideFrobeniusMaximal { element: String },
    /// Every basis element of `I^[p] : I` lies in `m^[p]`.
    ColonInsideFrobeniusMaximal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    #[serde(flatten)]
    pub check: Check,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub ring: RingSpec,
    pub order: String,
    pub ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<PrimeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<u32>>,
    pub witness: BTreeMap<String, String>,
    pub steps: Vec<Step>,
    pub conclusion: String,
    pub library_version: String,
}

/// Why a sufficient condition did not apply. This says nothing about
/// whether the initial ideal is squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFound {
    pub kind: CertificateKind,
    pub reason: String,
    /// Minimal generators of the initial ideal that was searched.
    pub searched: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Box<Certificate>),
    NotFound(NotFound),
}

impl Outcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Found(c) => Some(c),
            Outcome::NotFound(_) => None,
        }
    }
}

fn show(f: &Polynomial, order: &MonomialOrder) -> String {
    f.display_with(order).to_string()
}

fn show_all(fs: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    fs.iter().map(|f| show(f, order)).collect()
}

fn show_monomial(ring: &Ring, m: &Monomial) -> String {
    DisplayMonomial {
        names: ring.names(),
        monomial: m,
    }
    .to_string()
}

fn ring_spec(ring: &Ring) -> RingSpec {
    RingSpec {
        p: ring.characteristic() as u64,
        vars: ring.names().to_vec(),
    }
}

fn step(check: Check, passed: bool) -> Step {
    Step { check, passed }
}

fn initial_generators(i: &IdealPresentation, order: &MonomialOrder) -> Result<Vec<String>> {
    Ok(i.initial_ideal(order)?.display_generators(order))
}

fn squarefree_texts(ring: &Arc<Ring>, gens: &[String]) -> Result<bool> {
    for g in gens {
        if !parse_monomial(ring, g)?.is_squarefree() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fold_intersect(ideals: Vec<IdealPresentation>, order: &MonomialOrder) -> Result<IdealPresentation> {
    let mut it = ideals.into_iter();
    let mut acc = it.next().ok_or_else(|| Error::InvalidArgument("no ideals given".into()))?;
    for next in it {
        acc = intersect(&acc, &next, order)?;
    }
    Ok(acc)
}

fn check_in_colon_with_corner(
    colon: &IdealPresentation,
    element: &Polynomial,
    multiplier: &Monomial,
    order: &MonomialOrder,
) -> Result<bool> {
    let ring = colon.ring();
    let corner = corner_monomial(ring.nvars(), ring.characteristic());
    let scaled = element.checked_mul_monomial(multiplier, crate::field::Fp::ONE)?;
    Ok(!element.is_zero() && scaled.leading_monomial(order) == Some(&corner) && colon.member(element, order)?)
}

/// Looks for `f ∈ I^[p] : I` whose leading monomial divides
/// `X_1^(p−1)⋯X_n^(p−1)`. On success the certificate also confirms
/// directly that in(I) is squarefree.
pub fn charp_certificate(i: &IdealPresentation, order: &MonomialOrder) -> Result<Outcome> {
    let ring = i.ring();
    order.check_arity(ring.nvars())?;
    let corner = corner_monomial(ring.nvars(), ring.characteristic());
    let colon = fedder_colon(i, order)?;
    let cgb = colon.reduced_gb(order)?;
    let hit = cgb.elements().iter().find(|f| {
        f.leading_monomial(order)
            .map(|m| m.divides(&corner))
            .unwrap_or(false)
    });
    let Some(f) = hit else {
        return Ok(Outcome::NotFound(NotFound {
            kind: CertificateKind::CharP,
            reason: format!(
                "no element of in(I^[p] : I) divides {}",
                show_monomial(ring, &corner)
            ),
            searched: cgb.initial_ideal().display_generators(order),
        }));
    };
    let multiplier = corner.div(f.leading_monomial(order).expect("nonzero")).expect("divides");
    let init = initial_generators(i, order)?;
    let squarefree = squarefree_texts(ring, &init)?;
    if !squarefree {
        return Err(Error::Internal(format!(
            "colon element {} meets the corner but in(I) = ({}) is not squarefree",
            show(f, order),
            init.join(", ")
        )));
    }
    let element = show(f, order);
    let multiplier_text = show_monomial(ring, &multiplier);
    let steps = vec![
        step(
            Check::FedderColonBasis {
                basis: cgb.display_elements(),
            },
            true,
        ),
        step(
            Check::CornerWitness {
                element: element.clone(),
                multiplier: multiplier_text.clone(),
            },
            true,
        ),
        step(Check::InitialIdealSquarefree { generators: init }, true),
    ];
    let mut witness = BTreeMap::new();
    witness.insert("colon_element".into(), element);
    witness.insert("multiplier".into(), multiplier_text);
    Ok(Outcome::Found(Box::new(Certificate {
        kind: CertificateKind::CharP,
        ring: ring_spec(ring),
        order: order.to_string(),
        ideal: show_all(i.generators(), order),
        primes: Vec::new(),
        weight: None,
        witness,
        steps,
        conclusion: format!(
            "in_{order}(I) is a squarefree monomial ideal; valid over every field of characteristic {}",
            ring.characteristic()
        ),
        library_version: crate::VERSION.into(),
    })))
}

/// Works from a list of primes `P_i` with witnesses `g_i ∉ P_i`. With
/// `h = max ht P_i`, searches the reduced basis of `∩ (P_i^h : g_i^∞)` for a
/// squarefree leading monomial and, on success, confirms directly that
/// `in(∩ P_i)` is squarefree. A failed confirmation means some listed ideal
/// was not prime and is reported as [`Error::Inconsistent`].
pub fn symb_certificate(primes: &[(IdealPresentation, Polynomial)], order: &MonomialOrder) -> Result<Outcome> {
    let (first, _) = primes
        .first()
        .ok_or_else(|| Error::InvalidArgument("at least one prime is required".into()))?;
    let ring = first.ring().clone();
    order.check_arity(ring.nvars())?;
    let mut steps = Vec::new();
    let mut heights = Vec::new();
    for (k, (p, g)) in primes.iter().enumerate() {
        if **p.ring() != *ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Err(Error::InvalidArgument(format!("prime {} is the zero ideal", k + 1)));
        }
        if p.member(g, order)? {
            return Err(Error::WitnessInPrime(show(g, order)));
        }
        steps.push(step(
            Check::WitnessOutsidePrime {
                prime: k,
                witness: show(g, order),
            },
            true,
        ));
        let init = p.initial_ideal(order)?;
        let dimension = init.dimension()?;
        let height = ring.nvars() - dimension;
        heights.push(height);
        steps.push(step(
            Check::PrimeHeight {
                prime: k,
                initial: init.display_generators(order),
                dimension,
                height,
            },
            true,
        ));
    }
    let h = *heights.iter().max().expect("nonempty");
    steps.push(step(Check::MaxHeight { height: h }, true));

    let radical = fold_intersect(primes.iter().map(|(p, _)| p.clone()).collect(), order)?;
    let rgb = radical.reduced_gb(order)?;
    steps.push(step(
        Check::IntersectionBasis {
            basis: rgb.display_elements(),
        },
        true,
    ));

    let mut powers = Vec::new();
    for (p, g) in primes {
        powers.push(symbolic_power_prime(p, h as u32, g, order)?);
    }
    let symbolic = fold_intersect(powers, order)?;
    let sgb = symbolic.reduced_gb(order)?;
    steps.push(step(
        Check::SymbolicPowerBasis {
            height: h,
            basis: sgb.display_elements(),
        },
        true,
    ));
    let hit = sgb
        .elements()
        .iter()
        .find(|f| f.leading_monomial(order).map(Monomial::is_squarefree).unwrap_or(false));
    let Some(f) = hit else {
        return Ok(Outcome::NotFound(NotFound {
            kind: CertificateKind::Symb,
            reason: format!("no minimal generator of in(I^({h})) is squarefree"),
            searched: sgb.initial_ideal().display_generators(order),
        }));
    };
    let lead = f.leading_monomial(order).expect("nonzero").clone();
    steps.push(step(
        Check::SquarefreeMinimalGenerator {
            element: show(f, order),
            monomial: show_monomial(&ring, &lead),
            lemma: SQUAREFREE_LEMMA.into(),
        },
        true,
    ));
    let init = rgb.initial_ideal().display_generators(order);
    if !squarefree_texts(&ring, &init)? {
        return Err(Error::Inconsistent(format!(
            "in(I^({h})) contains the squarefree monomial {} but in(∩ P_i) = ({}) is not squarefree; \
             at least one listed ideal is not prime",
            show_monomial(&ring, &lead),
            init.join(", ")
        )));
    }
    steps.push(step(Check::InitialIdealSquarefree { generators: init }, true));

    let mut witness = BTreeMap::new();
    witness.insert("symbolic_power_element".into(), show(f, order));
    witness.insert("squarefree_monomial".into(), show_monomial(&ring, &lead));
    witness.insert("height".into(), h.to_string());
    Ok(Outcome::Found(Box::new(Certificate {
        kind: CertificateKind::Symb,
        ring: ring_spec(&ring),
        order: order.to_string(),
        ideal: rgb.display_elements(),
        primes: primes
            .iter()
            .map(|(p, g)| PrimeSpec {
                generators: show_all(p.generators(), order),
                witness: show(g, order),
            })
            .collect(),
        weight: None,
        witness,
        steps,
        conclusion: format!(
            "in_{order}({}) is a squarefree monomial ideal; symbolic power taken relative to the listed witnesses; valid over every field of characteristic {}",
            match primes.len() {
                1 => "P_1".to_string(),
                2 => "P_1 ∩ P_2".to_string(),
                k => format!("P_1 ∩ … ∩ P_{k}"),
            },
            ring.characteristic()
        ),
        library_version: crate::VERSION.into(),
    })))
}

/// `in_w(g)` for every g in the reduced basis of I for the weight order
/// refined by the tiebreak of `order`.
pub fn initial_forms(i: &IdealPresentation, w: &[u32], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let worder = MonomialOrder::weight(w.to_vec(), order.tiebreak());
    i.reduced_gb(&worder)?
        .elements()
        .iter()
        .map(|g| g.initial_w(w))
        .collect()
}

fn special_fiber(h: &IdealPresentation, base: &Arc<Ring>) -> Result<IdealPresentation> {
    let gens = h
        .generators()
        .iter()
        .map(|f| f.specialize_last(crate::field::Fp::ZERO, base))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealPresentation::new(base, gens)?.with_budget(h.budget().clone()))
}

fn general_fiber(h: &IdealPresentation, base: &Arc<Ring>) -> Result<IdealPresentation> {
    let gens = h
        .generators()
        .iter()
        .map(|f| dehomogenize(f, base))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealPresentation::new(base, gens)?.with_budget(h.budget().clone()))
}

fn homogeneous_for(f: &Polynomial, w: &[u32]) -> bool {
    let mut wt = w.to_vec();
    wt.push(1);
    f.is_weighted_homogeneous(&wt)
}

/// Builds `H = hom_w(I)` and checks its two fibers: `H|_{t=0} = in_w(I)`
/// and `H|_{t=1} = I`, plus w-homogeneity of every generator.
pub fn deformation_fibers(i: &IdealPresentation, w: &[u32], order: &MonomialOrder) -> Result<Certificate> {
    let ring = i.ring();
    order.check_arity(ring.nvars())?;
    let h = homogenize_w(i, w, order)?;
    let ext_order = MonomialOrder::Grevlex;
    let hgens = show_all(h.generators(), &ext_order);
    let forms = initial_forms(i, w, order)?;
    let forms_ideal = i.derive(forms.clone())?;
    let homogeneous = h.generators().iter().all(|f| homogeneous_for(f, w));
    let special = special_fiber(&h, ring)?.same_ideal(&forms_ideal, order)?;
    let general = general_fiber(&h, ring)?.same_ideal(i, order)?;
    let steps = vec![
        step(
            Check::HomogenizedBasis {
                vars: h.ring().names().to_vec(),
                generators: hgens.clone(),
            },
            true,
        ),
        step(Check::WeightHomogeneous, homogeneous),
        step(
            Check::SpecialFiber {
                initial_forms: show_all(&forms, order),
            },
            special,
        ),
        step(Check::GeneralFiber, general),
    ];
    let mut witness = BTreeMap::new();
    witness.insert("t".into(), h.ring().names().last().expect("extended").clone());
    let weights: Vec<String> = w.iter().map(u32::to_string).collect();
    Ok(Certificate {
        kind: CertificateKind::Deformation,
        ring: ring_spec(ring),
        order: order.to_string(),
        ideal: show_all(i.generators(), order),
        primes: Vec::new(),
        weight: Some(w.to_vec()),
        witness,
        steps,
        conclusion: format!(
            "S[t]/hom_w(I) with w = ({}) has fiber S/in_w(I) at t = 0 and S/I at t = 1",
            weights.join(",")
        ),
        library_version: crate::VERSION.into(),
    })
}

/// The graded test `I^[p] : I ⊄ m^[p]` recorded as a certificate; the
/// conclusion states the verdict either way.
pub fn fsplit_certificate(i: &IdealPresentation, order: &MonomialOrder) -> Result<Certificate> {
    let ring = i.ring();
    let verdict = crate::frobenius::fsplit_graded_test(i, order)?;
    let cgb = verdict.colon.reduced_gb(order)?;
    let mut steps = vec![step(
        Check::FedderColonBasis {
            basis: cgb.display_elements(),
        },
        true,
    )];
    let mut witness = BTreeMap::new();
    let conclusion = match &verdict.witness {
        Some(f) => {
            steps.push(step(
                Check::ColonOutsideFrobeniusMaximal {
                    element: show(f, order),
                },
                true,
            ));
            witness.insert("colon_element".into(), show(f, order));
            "S/I is F-split".to_string()
        }
        None => {
            steps.push(step(Check::ColonInsideFrobeniusMaximal, true));
            "S/I is not F-split: I^[p] : I lies in m^[p]".to_string()
        }
    };
    Ok(Certificate {
        kind: CertificateKind::FSplit,
        ring: ring_spec(ring),
        order: order.to_string(),
        ideal: show_all(i.generators(), order),
        primes: Vec::new(),
        weight: None,
        witness,
        steps,
        conclusion,
        library_version: crate::VERSION.into(),
    })
}

/// Everything a replay needs, computed lazily from the certificate text.
struct Replay<'a> {
    cert: &'a Certificate,
    ring: Arc<Ring>,
    order: MonomialOrder,
    ideal: IdealPresentation,
    primes: Vec<(IdealPresentation, Polynomial)>,
    colon: Option<IdealPresentation>,
    hom: Option<IdealPresentation>,
}

impl<'a> Replay<'a> {
    fn new(cert: &'a Certificate) -> Result<Self> {
        let ring = Ring::new(cert.ring.p, &cert.ring.vars)?;
        let order: MonomialOrder = cert.order.parse()?;
        order.check_arity(ring.nvars())?;
        let parse_all = |gens: &[String]| -> Result<Vec<Polynomial>> {
            gens.iter().map(|g| parse_polynomial(&ring, g)).collect()
        };
        let ideal = IdealPresentation::new(&ring, parse_all(&cert.ideal)?)?;
        let mut primes = Vec::new();
        for p in &cert.primes {
            primes.push((
                IdealPresentation::new(&ring, parse_all(&p.generators)?)?,
                parse_polynomial(&ring, &p.witness)?,
            ));
        }
        Ok(Replay {
            cert,
            ring,
            order,
            ideal,
            primes,
            colon: None,
            hom: None,
        })
    }

    fn colon(&mut self) -> Result<&IdealPresentation> {
        if self.colon.is_none() {
            self.colon = Some(fedder_colon(&self.ideal, &self.order)?);
        }
        Ok(self.colon.as_ref().expect("set"))
    }

    fn weight(&self) -> Result<&[u32]> {
        self.cert
            .weight
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("certificate has no weight vector".into()))
    }

    fn hom(&mut self) -> Result<&IdealPresentation> {
        if self.hom.is_none() {
            let w = self.weight()?.to_vec();
            self.hom = Some(homogenize_w(&self.ideal, &w, &self.order)?);
        }
        Ok(self.hom.as_ref().expect("set"))
    }

    fn prime(&self, k: usize) -> Result<&(IdealPresentation, Polynomial)> {
        self.primes
            .get(k)
            .ok_or_else(|| Error::InvalidArgument(format!("certificate has no prime {k}")))
    }

    fn heights(&self) -> Result<Vec<usize>> {
        self.primes
            .iter()
            .map(|(p, _)| Ok(self.ring.nvars() - p.initial_ideal(&self.order)?.dimension()?))
            .collect()
    }

    fn check(&mut self, check: &Check) -> Result<bool> {
        let order = self.order.clone();
        match check {
            Check::FedderColonBasis { basis } => Ok(self.colon()?.reduced_gb(&order)?.display_elements() == *basis),
            Check::CornerWitness { element, multiplier } => {
                let f = parse_polynomial(&self.ring, element)?;
                let m = parse_monomial(&self.ring, multiplier)?;
                let colon = self.colon()?.clone();
                check_in_colon_with_corner(&colon, &f, &m, &order)
            }
            Check::InitialIdealSquarefree { generators } => {
                let target = if self.cert.kind == CertificateKind::Symb && !self.primes.is_empty() {
                    fold_intersect(self.primes.iter().map(|(p, _)| p.clone()).collect(), &order)?
                } else {
                    self.ideal.clone()
                };
                let init = initial_generators(&target, &order)?;
                Ok(init == *generators && squarefree_texts(&self.ring, &init)?)
            }
            Check::WitnessOutsidePrime { prime, witness } => {
                let (p, g) = self.prime(*prime)?;
                Ok(show(g, &order) == *witness && !p.member(g, &order)?)
            }
            Check::PrimeHeight {
                prime,
                initial,
                dimension,
                height,
            } => {
                let (p, _) = self.prime(*prime)?;
                let init = p.initial_ideal(&order)?;
                let d = init.dimension()?;
                Ok(init.display_generators(&order) == *initial
                    && d == *dimension
                    && self.ring.nvars() - d == *height)
            }
            Check::MaxHeight { height } => Ok(self.heights()?.into_iter().max() == Some(*height)),
            Check::IntersectionBasis { basis } => {
                let r = fold_intersect(self.primes.iter().map(|(p, _)| p.clone()).collect(), &order)?;
                Ok(r.reduced_gb(&order)?.display_elements() == *basis && self.ideal.same_ideal(&r, &order)?)
            }
            Check::SymbolicPowerBasis { height, basis } => {
                let mut powers = Vec::new();
                for (p, g) in &self.primes {
                    powers.push(symbolic_power_prime(p, *height as u32, g, &order)?);
                }
                let s = fold_intersect(powers, &order)?;
                Ok(s.reduced_gb(&order)?.display_elements() == *basis)
            }
            Check::SquarefreeMinimalGenerator { element, monomial, .. } => {
                let f = parse_polynomial(&self.ring, element)?;
                let m = parse_monomial(&self.ring, monomial)?;
                let h = self.heights()?.into_iter().max().unwrap_or(0) as u32;
                let mut powers = Vec::new();
                for (p, g) in &self.primes {
                    powers.push(symbolic_power_prime(p, h, g, &order)?);
                }
                let s = fold_intersect(powers, &order)?;
                Ok(m.is_squarefree() && f.leading_monomial(&order) == Some(&m) && s.member(&f, &order)?)
            }
            Check::HomogenizedBasis { vars, generators } => {
                let h = self.hom()?;
                Ok(h.ring().names() == vars.as_slice()
                    && show_all(h.generators(), &MonomialOrder::Grevlex) == *generators)
            }
            Check::WeightHomogeneous => {
                let w = self.weight()?.to_vec();
                Ok(self.hom()?.generators().iter().all(|f| homogeneous_for(f, &w)))
            }
            Check::SpecialFiber { initial_forms: recorded } => {
                let w = self.weight()?.to_vec();
                let forms = initial_forms(&self.ideal, &w, &order)?;
                let forms_ideal = self.ideal.derive(forms.clone())?;
                let ring = self.ring.clone();
                let special = special_fiber(self.hom()?, &ring)?;
                Ok(show_all(&forms, &order) == *recorded && special.same_ideal(&forms_ideal, &order)?)
            }
            Check::GeneralFiber => {
                let ring = self.ring.clone();
                let general = general_fiber(self.hom()?, &ring)?;
                general.same_ideal(&self.ideal, &order)
            }
            Check::ColonOutsideFrobeniusMaximal { element } => {
                let f = parse_polynomial(&self.ring, element)?;
                let colon = self.colon()?.clone();
                Ok(!in_frobenius_maximal(&f) && colon.member(&f, &order)?)
            }
            Check::ColonInsideFrobeniusMaximal => {
                let colon = self.colon()?.clone();
                Ok(colon.reduced_gb(&order)?.elements().iter().all(in_frobenius_maximal))
            }
        }
    }
}

impl Certificate {
    /// Recomputes every check; the result is the list of pass/fail values.
    pub fn replay(&self) -> Result<Vec<bool>> {
        let mut r = Replay::new(self)?;
        self.steps.iter().map(|s| r.check(&s.check)).collect()
    }

    /// The replay reproduces the recorded results and every check passes.
    pub fn verify(&self) -> Result<bool> {
        let replayed = self.replay()?;
        let recorded: Vec<bool> = self.steps.iter().map(|s| s.passed).collect();
        Ok(replayed == recorded && recorded.iter().all(|&b| b))
    }

    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &Arc<Ring>, src: &[&str]) -> IdealPresentation {
        IdealPresentation::new(r, src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn charp_on_a_determinant() {
        let r = Ring::new(2, &["x1", "x2", "x3", "x4"]).unwrap();
        let o = MonomialOrder::Lex;
        let out = charp_certificate(&ideal(&r, &["x1*x4 - x2*x3"]), &o).unwrap();
        let cert = out.certificate().expect("found");
        assert_eq!(cert.steps.last().unwrap().check, Check::InitialIdealSquarefree { generators: vec!["x1*x4".into()] });
        assert!(cert.verify().unwrap());
    }

    #[test]
    fn charp_non_example() {
        let r = Ring::new(2, &["x"]).unwrap();
        match charp_certificate(&ideal(&r, &["x^2"]), &MonomialOrder::Lex).unwrap() {
            Outcome::NotFound(nf) => assert_eq!(nf.searched, ["x^2"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symb_with_height_one() {
        let r = Ring::new(3, &["x1", "x2", "x3", "x4"]).unwrap();
        let o = MonomialOrder::Lex;
        let p = ideal(&r, &["x1*x4 - x2*x3"]);
        let cert = symb_certificate(&[(p, Polynomial::one(&r))], &o).unwrap();
        let cert = cert.certificate().expect("found");
        assert!(cert.steps.iter().any(|s| s.check == Check::MaxHeight { height: 1 }));
        assert!(cert.verify().unwrap());
    }

    #[test]
    fn symb_rejects_bad_inputs() {
        let r = Ring::new(3, &["x", "y"]).unwrap();
        let o = MonomialOrder::Lex;
        let p = ideal(&r, &["x^2", "x*y"]);
        let y = parse_polynomial(&r, "y").unwrap();
        assert!(matches!(symb_certificate(&[(p.clone(), y)], &o), Err(Error::Inconsistent(_))));
        let xy = parse_polynomial(&r, "x*y").unwrap();
        assert!(matches!(symb_certificate(&[(p, xy)], &o), Err(Error::WitnessInPrime(_))));
    }

    #[test]
    fn fibers_of_a_parabola() {
        let r = Ring::new(7, &["x", "y"]).unwrap();
        let cert = deformation_fibers(&ideal(&r, &["x^2 - y"]), &[1, 1], &MonomialOrder::Lex).unwrap();
        assert!(cert.all_passed());
        assert_eq!(
            cert.steps[0].check,
            Check::HomogenizedBasis {
                vars: vec!["x".into(), "y".into(), "t".into()],
                generators: vec!["x^2 - y*t".into()]
            }
        );
        assert!(cert.verify().unwrap());
    }

    #[test]
    fn tampered_certificates_fail() {
        let r = Ring::new(2, &["x1", "x2", "x3", "x4"]).unwrap();
        let o = MonomialOrder::Lex;
        let mut cert = *match charp_certificate(&ideal(&r, &["x1*x4 - x2*x3"]), &o).unwrap() {
            Outcome::Found(c) => c,
            other => panic!("{other:?}"),
        };
        cert.steps[2].check = Check::InitialIdealSquarefree {
            generators: vec!["x2*x3".into()],
        };
        assert!(!cert.verify().unwrap());
    }
}
