use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{KGpdElement, KGpdError};
use crate::group::{canonical_key, center, conjugacy_classes, GroupKey};
use crate::DEFAULT_ORDER_CAP;

/// Per-class data: order of the center and the centralizer classes of the
/// non-central conjugacy classes, in class order.
struct ClassData {
    center_order: usize,
    central_classes: usize,
    noncentral_centralizers: Vec<GroupKey>,
}

fn class_data(key: &GroupKey) -> Arc<ClassData> {
    static CACHE: OnceLock<RwLock<HashMap<GroupKey, Arc<ClassData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.read().expect("class cache").get(key) {
        return d.clone();
    }
    let g = key.group();
    let z = center(&g).order();
    let mut central_classes = 0;
    let mut noncentral_centralizers = Vec::new();
    for class in conjugacy_classes(&g) {
        if class.size() == 1 {
            central_classes += 1;
            continue;
        }
        let c = class.centralizer.order();
        assert!(
            z < c && c < g.order(),
            "centralizer orders out of range in {key}: #Z = {z}, #Z(g) = {c}, #G = {}",
            g.order()
        );
        noncentral_centralizers.push(canonical_key(&class.centralizer.group));
    }
    let data = Arc::new(ClassData {
        center_order: z,
        central_classes,
        noncentral_centralizers,
    });
    cache
        .write()
        .expect("class cache")
        .insert(key.clone(), data.clone());
    data
}

/// `I[BG] = Σ_{classes} [B Z_G(g)]` on a single class.
fn inertia_class(key: &GroupKey) -> KGpdElement {
    let d = class_data(key);
    let mut out = KGpdElement::zero();
    out.add_int_term(key.clone(), &BigInt::from(d.central_classes));
    for c in &d.noncentral_centralizers {
        out.add_term(c.clone(), BigRational::one());
    }
    out
}

pub fn inertia(x: &KGpdElement) -> KGpdElement {
    x.map_linear(inertia_class)
}

/// `I` applied `k` times.
pub fn iterated_inertia(x: &KGpdElement, k: usize) -> KGpdElement {
    (0..k).fold(x.clone(), |acc, _| inertia(&acc))
}

type Counts = Arc<BTreeMap<GroupKey, BigInt>>;
/// `(C, m, j)` as in `extensions`.
type ExtensionKey = (GroupKey, usize, usize);

/// Orbits of distinct commuting `j`-tuples extending a fixed `m`-set `S` of
/// central elements of `C = Z_G(S)`, grouped by stabilizer class. The next
/// entry is either one of the `#Z(C) − m` unused central elements (stabilizer
/// `C`) or a non-central class of `C` (stabilizer its centralizer), so the
/// answer only depends on the class of `C`, `m` and `j`.
fn extensions(c: &GroupKey, m: usize, j: usize) -> Counts {
    static MEMO: OnceLock<RwLock<HashMap<ExtensionKey, Counts>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let id = (c.clone(), m, j);
    if let Some(v) = memo.read().expect("extension memo").get(&id) {
        return v.clone();
    }
    let mut out: BTreeMap<GroupKey, BigInt> = BTreeMap::new();
    if j == 0 {
        out.insert(c.clone(), BigInt::one());
    } else {
        let d = class_data(c);
        let free = d.center_order - m;
        if free > 0 {
            for (k, v) in extensions(c, m + 1, j - 1).iter() {
                *out.entry(k.clone()).or_default() += v * BigInt::from(free);
            }
        }
        for z in &d.noncentral_centralizers {
            for (k, v) in extensions(z, m + 1, j - 1).iter() {
                *out.entry(k.clone()).or_default() += v;
            }
        }
    }
    let out = Arc::new(out);
    memo.write()
        .expect("extension memo")
        .insert(id, out.clone());
    out
}

fn inertia_r_class(key: &GroupKey, r: usize) -> KGpdElement {
    let mut out = KGpdElement::zero();
    for (k, v) in extensions(key, 0, r).iter() {
        out.add_int_term(k.clone(), v);
    }
    out
}

/// `I_r`: orbits of ordered `r`-tuples of distinct, pairwise-commuting
/// elements, weighted by their stabilizers.
pub fn inertia_r(x: &KGpdElement, r: usize) -> KGpdElement {
    x.map_linear(|k| inertia_r_class(k, r))
}

/// Largest `r` with `I_r[BG] ≠ 0`, i.e. the largest order of a commuting
/// subset of `G`.
pub fn max_commuting_length(key: &GroupKey) -> usize {
    let mut r = 0;
    while !extensions(key, 0, r + 1).is_empty() {
        r += 1;
    }
    r
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn projection_class(key: &GroupKey, k: usize) -> KGpdElement {
    let rmax = max_commuting_length(key);
    let mut out = KGpdElement::zero();
    for r in k..=rmax {
        let sign = if (r + k).is_multiple_of(2) { 1 } else { -1 };
        let c = BigRational::new(BigInt::from(sign) * binomial(r, k), factorial(r));
        out += &inertia_r_class(key, r).scale(&c);
    }
    out
}

/// Component of `x` in the eigenvalue-`k` eigenspace of `I`.
pub fn projection(x: &KGpdElement, k: usize) -> KGpdElement {
    x.map_linear(|key| projection_class(key, k))
}

/// All nonzero components `(k, π_k x)`, ascending in `k`.
pub fn eigen_components(x: &KGpdElement) -> Vec<(usize, KGpdElement)> {
    let top = x
        .terms()
        .map(|(k, _)| max_commuting_length(k))
        .max()
        .unwrap_or(0);
    (0..=top)
        .map(|k| (k, projection(x, k)))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// `[BG]·[BH] = [B(G×H)]`.
pub fn product(x: &KGpdElement, y: &KGpdElement) -> Result<KGpdElement, KGpdError> {
    let mut out = KGpdElement::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let g = a
                .group()
                .direct_product_capped(&b.group(), DEFAULT_ORDER_CAP)?;
            out.add_term(canonical_key(&g), ca * cb);
        }
    }
    Ok(out)
}

/// Smallest center order over the support; `None` for zero.
pub fn filtration_degree(x: &KGpdElement) -> Option<usize> {
    x.terms().map(|(k, _)| k.center_order()).min()
}
