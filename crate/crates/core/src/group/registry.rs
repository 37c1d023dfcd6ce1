//! Process-wide registry assigning one canonical label per isomorphism class.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, RwLock};

use super::catalog::BuiltinGroup;
use super::{are_isomorphic, fingerprint, Fingerprint, FiniteGroup, GroupError};

/// Identifies an isomorphism class of finite groups. Two keys are equal iff
/// their labels are, and the registry hands out one label per class.
#[derive(Clone)]
pub struct GroupKey {
    label: Arc<str>,
    fingerprint: Arc<Fingerprint>,
}

impl GroupKey {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        &self.fingerprint
    }

    pub fn order(&self) -> usize {
        self.fingerprint.order
    }

    pub fn center_order(&self) -> usize {
        self.fingerprint.center_order
    }

    /// The registered representative of this class.
    pub fn group(&self) -> Arc<FiniteGroup> {
        let reg = registry().read().expect("registry lock");
        reg.groups[reg.by_label[&*self.label]].clone()
    }
}

impl PartialEq for GroupKey {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
    }
}

impl Eq for GroupKey {}

impl Hash for GroupKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.label.hash(state);
    }
}

impl Ord for GroupKey {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.label, &other.label)
    }
}

impl PartialOrd for GroupKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupKey({})", self.label)
    }
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// String order that compares digit runs numerically, so `Z2 < Z10`.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, _) => return Ordering::Less,
            (_, None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let da = a.iter().take_while(|c| c.is_ascii_digit()).count();
                let db = b.iter().take_while(|c| c.is_ascii_digit()).count();
                let na = std::str::from_utf8(&a[..da])
                    .unwrap()
                    .trim_start_matches('0');
                let nb = std::str::from_utf8(&b[..db])
                    .unwrap()
                    .trim_start_matches('0');
                let ord = na.len().cmp(&nb.len()).then_with(|| na.cmp(nb));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = &a[da..];
                b = &b[db..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

#[derive(Default)]
struct Registry {
    keys: Vec<GroupKey>,
    groups: Vec<Arc<FiniteGroup>>,
    by_label: HashMap<Arc<str>, usize>,
    by_fingerprint: HashMap<Fingerprint, Vec<usize>>,
}

impl Registry {
    fn find(&self, fp: &Fingerprint, g: &FiniteGroup) -> Option<GroupKey> {
        self.by_fingerprint
            .get(fp)?
            .iter()
            .find_map(|&i| are_isomorphic(g, &self.groups[i]).then(|| self.keys[i].clone()))
    }
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

/// The canonical key of `g`'s isomorphism class, registering `g` as the
/// representative if the class is new.
pub fn canonical_key(g: &FiniteGroup) -> GroupKey {
    let fp = fingerprint(g);
    if let Some(k) = registry().read().expect("registry lock").find(&fp, g) {
        return k;
    }
    let catalog = catalog_label(g, &fp);
    let mut reg = registry().write().expect("registry lock");
    if let Some(k) = reg.find(&fp, g) {
        return k;
    }
    let label: Arc<str> = match catalog {
        Some(l) => l.into(),
        None => {
            let n = reg
                .keys
                .iter()
                .filter(|k| k.order() == g.order() && k.label.starts_with('G'))
                .count();
            format!("G{}_{}", g.order(), n + 1).into()
        }
    };
    let key = GroupKey {
        label: label.clone(),
        fingerprint: Arc::new(fp.clone()),
    };
    let idx = reg.keys.len();
    reg.keys.push(key.clone());
    reg.groups
        .push(Arc::new(g.clone().with_name(label.to_string())));
    reg.by_label.insert(label, idx);
    reg.by_fingerprint.entry(fp).or_default().push(idx);
    key
}

/// Resolve a label to its key: either a registered label, or any catalog
/// name (which is then canonicalized, so `D2` resolves to `Z2 x Z2`).
pub fn resolve_label(label: &str) -> Result<GroupKey, GroupError> {
    let label = label.trim();
    {
        let reg = registry().read().expect("registry lock");
        if let Some(&i) = reg.by_label.get(label) {
            return Ok(reg.keys[i].clone());
        }
    }
    let b: BuiltinGroup = label.parse()?;
    Ok(canonical_key(&b.build()))
}

/// Snapshot of all registered classes in registration order.
pub fn registered_groups() -> Vec<(GroupKey, Arc<FiniteGroup>)> {
    let reg = registry().read().expect("registry lock");
    reg.keys
        .iter()
        .cloned()
        .zip(reg.groups.iter().cloned())
        .collect()
}

/// Invariant factors `d_1 | d_2 | …` of an abelian group, from the counts of
/// elements whose order divides each prime power.
fn invariant_factors(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    let mut factors: Vec<usize> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if !m.is_multiple_of(p) {
            p += 1;
            continue;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        // log_p #{x : x^{p^k} = 1} = Σ_i min(k, e_i)
        let mut logs = vec![0usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            if l == *logs.last().unwrap() {
                break;
            }
            logs.push(l);
        }
        // Number of cyclic p-factors of exponent ≥ k is logs[k] − logs[k−1].
        let at_least: Vec<usize> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for (k, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            exps.extend(std::iter::repeat_n(k + 1, cnt - next));
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (j, e) in exps.into_iter().enumerate() {
            if factors.len() <= j {
                factors.push(1);
            }
            factors[j] *= p.pow(e as u32);
        }
    }
    factors.reverse();
    factors
}

fn catalog_label(g: &FiniteGroup, fp: &Fingerprint) -> Option<String> {
    let n = g.order();
    if n == 1 {
        return Some(BuiltinGroup::Trivial.to_string());
    }
    if fp.abelian {
        let f = invariant_factors(g);
        let b = if f.len() == 1 {
            BuiltinGroup::Cyclic(f[0])
        } else {
            BuiltinGroup::Abelian(f)
        };
        return Some(b.to_string());
    }
    let mut candidates = Vec::new();
    if let Some(m) = (3..=6).find(|&m| (1..=m).product::<usize>() == n) {
        candidates.push(BuiltinGroup::Symmetric(m));
    }
    if n.is_multiple_of(2) && n >= 6 {
        candidates.push(BuiltinGroup::Dihedral(n / 2));
    }
    if n == 8 {
        candidates.push(BuiltinGroup::Quaternion);
    }
    candidates
        .into_iter()
        .find(|b| are_isomorphic(g, &b.build()))
        .map(|b| b.to_string())
}

#[cfg(test)]
mod tests {
    use super::super::builtin;
    use super::*;

    #[test]
    fn catalog_names_preferred() {
        assert_eq!(canonical_key(&builtin("D3").unwrap()).label(), "S3");
        assert_eq!(canonical_key(&builtin("D2").unwrap()).label(), "Z2 x Z2");
        assert_eq!(canonical_key(&builtin("Z2 x Z3").unwrap()).label(), "Z6");
        assert_eq!(
            canonical_key(&builtin("Z4 x Z2").unwrap()).label(),
            "Z2 x Z4"
        );
        assert_eq!(
            canonical_key(&builtin("Z6 x Z4").unwrap()).label(),
            "Z2 x Z12"
        );
        assert_eq!(canonical_key(&builtin("D1").unwrap()).label(), "Z2");
        assert_eq!(canonical_key(&builtin("Q8").unwrap()).label(), "Q8");
        assert_eq!(
            canonical_key(&builtin("trivial").unwrap()).label(),
            "trivial"
        );
    }

    #[test]
    fn same_class_same_key() {
        let a = canonical_key(&builtin("D4").unwrap());
        let b = resolve_label("D4").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.group().order(), 8);
        assert_eq!(resolve_label("D2").unwrap().label(), "Z2 x Z2");
        assert!(resolve_label("nonsense").is_err());
    }

    #[test]
    fn non_catalog_groups_get_generic_labels() {
        // A4 is not in the catalog.
        let a4 = super::super::parse_group_spec("perm:(0 1 2), (1 2 3)", 100).unwrap();
        let k = canonical_key(&a4);
        assert!(k.label().starts_with("G12_"), "{k}");
        assert_eq!(resolve_label(k.label()).unwrap(), k);
    }

    #[test]
    fn natural_order() {
        let mut v = vec!["Z10", "Z2", "D4", "Z2 x Z2", "S3", "Z4"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(v, vec!["D4", "S3", "Z2", "Z2 x Z2", "Z4", "Z10"]);
    }
}
