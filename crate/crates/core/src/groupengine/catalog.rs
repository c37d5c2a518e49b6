//! The group catalog: named constructions, direct products of catalog
//! entries, curated normal pairs, composition chains, and the corpus
//! used by recognition scans and property sweeps.

use super::field::Gf;
use super::group::PermGroup;
use super::perm::Perm;
use super::EngineError;

/// Builds the catalog group with the given canonical label. Labels:
/// `sym(n)`, `alt(n)` (n <= 10), `dihedral(n)` (3 <= n <= 100, order 2n),
/// `cyclic(n)`, `psl2(q)` (q <= 32), `pgl2(q)` (q <= 19), `frob18a`,
/// `frob18b`, and `x`-joined direct products of these.
pub fn catalog_group(name: &str) -> Result<PermGroup, EngineError> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut acc = catalog_atom(parts[0])?;
        for part in &parts[1..] {
            let next = catalog_atom(part)?;
            acc = acc.direct_product(&next)?;
        }
        check_cap(&acc)?;
        return Ok(acc);
    }
    let g = catalog_atom(name)?;
    check_cap(&g)?;
    Ok(g)
}

fn check_cap(g: &PermGroup) -> Result<(), EngineError> {
    if let Some(order) = predicted_order(g.name()) {
        if order > super::group::DEFAULT_ELEMENT_CAP as u64 {
            return Err(EngineError::CapExceeded {
                group: g.name().to_string(),
                cap: super::group::DEFAULT_ELEMENT_CAP,
            });
        }
    }
    Ok(())
}

/// The order a catalog label will have, without enumerating it.
pub fn predicted_order(name: &str) -> Option<u64> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let mut acc: u64 = 1;
        for part in &parts {
            acc = acc.checked_mul(predicted_order(part)?)?;
        }
        return Some(acc);
    }
    let (kind, arg) = parse_label(name)?;
    Some(match kind {
        "sym" => factorial(arg),
        "alt" => {
            if arg <= 2 {
                1.max(factorial(arg) / 2)
            } else {
                factorial(arg) / 2
            }
        }
        "dihedral" => 2 * arg,
        "cyclic" => arg,
        "psl2" => {
            let q = arg;
            q * (q * q - 1) / num_integer::gcd(2, q - 1)
        }
        "pgl2" => arg * (arg * arg - 1),
        "frob18a" | "frob18b" => 18,
        _ => return None,
    })
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn parse_label(name: &str) -> Option<(&str, u64)> {
    if name == "frob18a" || name == "frob18b" {
        return Some((name, 0));
    }
    let open = name.find('(')?;
    if !name.ends_with(')') {
        return None;
    }
    let kind = &name[..open];
    let arg: u64 = name[open + 1..name.len() - 1].parse().ok()?;
    Some((kind, arg))
}

fn catalog_atom(name: &str) -> Result<PermGroup, EngineError> {
    let unknown = || EngineError::UnknownGroup(name.to_string());
    match name {
        "frob18a" => return frob18a(),
        "frob18b" => return dihedral_group(9).map(|mut g| {
            g.set_name("frob18b");
            g
        }),
        _ => {}
    }
    let (kind, arg) = parse_label(name).ok_or_else(unknown)?;
    match kind {
        "sym" => {
            if !(1..=10).contains(&arg) {
                return Err(unknown());
            }
            symmetric_group(arg as usize)
        }
        "alt" => {
            if !(1..=10).contains(&arg) {
                return Err(unknown());
            }
            alternating_group(arg as usize)
        }
        "dihedral" => {
            if !(3..=100).contains(&arg) {
                return Err(unknown());
            }
            dihedral_group(arg as usize)
        }
        "cyclic" => {
            if arg < 1 || arg > 10_000 {
                return Err(unknown());
            }
            cyclic_group(arg as usize)
        }
        "psl2" => {
            if arg > 32 || crate::lieorders::prime_power(arg).is_none() {
                return Err(unknown());
            }
            psl2(arg as u16)
        }
        "pgl2" => {
            if arg > 19 || crate::lieorders::prime_power(arg).is_none() {
                return Err(unknown());
            }
            pgl2(arg as u16)
        }
        _ => Err(unknown()),
    }
}

pub fn symmetric_group(n: usize) -> Result<PermGroup, EngineError> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[vec![0, 1]])?);
    }
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[(0..n as u16).collect()])?);
    }
    PermGroup::from_generators(format!("sym({n})"), n.max(1), gens)
}

pub fn alternating_group(n: usize) -> Result<PermGroup, EngineError> {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[vec![0, 1, 2]])?);
    }
    if n >= 4 {
        let cycle: Vec<u16> = if n % 2 == 1 {
            (0..n as u16).collect()
        } else {
            (1..n as u16).collect()
        };
        gens.push(Perm::from_cycles(n, &[cycle])?);
    }
    PermGroup::from_generators(format!("alt({n})"), n.max(1), gens)
}

/// Symmetries of the regular n-gon, order 2n.
pub fn dihedral_group(n: usize) -> Result<PermGroup, EngineError> {
    let rotation = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    let reflection = Perm::from_images(
        (0..n as u16)
            .map(|i| ((n as u16) - i) % n as u16)
            .collect(),
    )?;
    PermGroup::from_generators(format!("dihedral({n})"), n, vec![rotation, reflection])
}

pub fn cyclic_group(n: usize) -> Result<PermGroup, EngineError> {
    let gens = if n > 1 {
        vec![Perm::from_cycles(n, &[(0..n as u16).collect()])?]
    } else {
        Vec::new()
    };
    PermGroup::from_generators(format!("cyclic({n})"), n.max(1), gens)
}

/// (C3 × C3) ⋊ C2 with the complement acting by inversion: the points are
/// the nine vectors of F_3^2, translated and negated.
fn frob18a() -> Result<PermGroup, EngineError> {
    let point = |x: u16, y: u16| -> u16 { 3 * (x % 3) + (y % 3) };
    let mut t1 = vec![0u16; 9];
    let mut t2 = vec![0u16; 9];
    let mut neg = vec![0u16; 9];
    for x in 0..3u16 {
        for y in 0..3u16 {
            let i = point(x, y) as usize;
            t1[i] = point(x + 1, y);
            t2[i] = point(x, y + 1);
            neg[i] = point((3 - x) % 3, (3 - y) % 3);
        }
    }
    PermGroup::from_generators(
        "frob18a",
        9,
        vec![
            Perm::from_images(t1)?,
            Perm::from_images(t2)?,
            Perm::from_images(neg)?,
        ],
    )
}

/// PSL(2, q) in its natural action on the q+1 points of the projective
/// line, generated by the images of all elementary transvections.
pub fn psl2(q: u16) -> Result<PermGroup, EngineError> {
    projective_action(q, false)
}

/// PGL(2, q) on the projective line: the PSL generators plus a diagonal
/// matrix with a primitive-element determinant.
pub fn pgl2(q: u16) -> Result<PermGroup, EngineError> {
    projective_action(q, true)
}

fn projective_action(q: u16, general: bool) -> Result<PermGroup, EngineError> {
    let f = Gf::new(q)?;
    // points: 0..q-1 is [x : 1], q is [1 : 0]
    let degree = q as usize + 1;
    let act = |m: [u16; 4]| -> Result<Perm, EngineError> {
        let (a, b, c, d) = (m[0], m[1], m[2], m[3]);
        let mut images = vec![0u16; degree];
        for pt in 0..degree as u16 {
            let (x, z) = if pt == q { (1, 0) } else { (pt, 1) };
            // (x, z) -> (a x + b z, c x + d z)
            let nx = f.add(f.mul(a, x), f.mul(b, z));
            let nz = f.add(f.mul(c, x), f.mul(d, z));
            images[pt as usize] = if nz == 0 {
                q
            } else {
                f.mul(nx, f.inv(nz))
            };
        }
        Perm::from_images(images)
    };
    let mut gens = Vec::new();
    for lambda in 1..q {
        gens.push(act([1, lambda, 0, 1])?);
        gens.push(act([1, 0, lambda, 1])?);
    }
    let name = if general {
        let g = f.primitive_element();
        gens.push(act([g, 0, 0, 1])?);
        format!("pgl2({q})")
    } else {
        format!("psl2({q})")
    };
    PermGroup::from_generators(name, degree, gens)
}

/// Curated (group, normal subgroup) fixtures, by label.
pub fn catalog_normal_pair(name: &str) -> Result<(PermGroup, PermGroup), EngineError> {
    let (glabel, klabel) = name
        .split_once(':')
        .ok_or_else(|| EngineError::UnknownGroup(name.to_string()))?;
    let g = catalog_group(glabel)?;
    let k = match (glabel, klabel) {
        (_, "trivial") => PermGroup::from_generators("trivial", g.degree(), vec![])?,
        ("sym(4)", "klein4") | ("alt(4)", "klein4") => klein_in_degree4()?,
        ("sym(4)", "alt(4)") => alternating_group(4)?,
        ("sym(3)", "cyclic(3)") => {
            PermGroup::from_generators("cyclic(3)", 3, vec![Perm::from_cycles(3, &[vec![0, 1, 2]])?])?
        }
        ("sym(5)", "alt(5)") => alternating_group(5)?,
        ("frob18a", "kernel9") => {
            let g9 = catalog_group("frob18a")?;
            let t1 = g9.generators()[0].clone();
            let t2 = g9.generators()[1].clone();
            PermGroup::from_generators("kernel9", 9, vec![t1, t2])?
        }
        ("dihedral(9)", "cyclic(9)") | ("frob18b", "cyclic(9)") => {
            PermGroup::from_generators(
                "cyclic(9)",
                9,
                vec![Perm::from_cycles(9, &[(0..9).collect()])?],
            )?
        }
        ("dihedral(15)", "cyclic(15)") => PermGroup::from_generators(
            "cyclic(15)",
            15,
            vec![Perm::from_cycles(15, &[(0..15).collect()])?],
        )?,
        ("dihedral(15)", "cyclic(5)") => PermGroup::from_generators(
            "cyclic(5)",
            15,
            vec![Perm::from_cycles(15, &[(0..15).collect()])?.pow(3)],
        )?,
        ("dihedral(15)", "cyclic(3)") => PermGroup::from_generators(
            "cyclic(3)",
            15,
            vec![Perm::from_cycles(15, &[(0..15).collect()])?.pow(5)],
        )?,
        ("cyclic(6)", "cyclic(3)") => PermGroup::from_generators(
            "cyclic(3)",
            6,
            vec![Perm::from_cycles(6, &[(0..6).collect()])?.pow(2)],
        )?,
        ("cyclic(12)", "cyclic(4)") => PermGroup::from_generators(
            "cyclic(4)",
            12,
            vec![Perm::from_cycles(12, &[(0..12).collect()])?.pow(3)],
        )?,
        _ => return Err(EngineError::UnknownGroup(name.to_string())),
    };
    if !k.is_normal_in(&g)? {
        return Err(EngineError::NotNormal(format!(
            "fixture {name} is not a normal pair"
        )));
    }
    Ok((g, k))
}

fn klein_in_degree4() -> Result<PermGroup, EngineError> {
    PermGroup::from_generators(
        "klein4",
        4,
        vec![
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
        ],
    )
}

/// The labels of all curated normal pairs.
pub fn normal_pair_labels() -> Vec<&'static str> {
    vec![
        "sym(4):klein4",
        "sym(4):alt(4)",
        "alt(4):klein4",
        "sym(3):cyclic(3)",
        "sym(5):alt(5)",
        "frob18a:kernel9",
        "dihedral(9):cyclic(9)",
        "dihedral(15):cyclic(15)",
        "dihedral(15):cyclic(5)",
        "dihedral(15):cyclic(3)",
        "cyclic(6):cyclic(3)",
        "cyclic(12):cyclic(4)",
        "psl2(7):trivial",
        "sym(4):trivial",
    ]
}

/// Curated composition-style chains G = H_0 > H_1 > ... > 1 with each
/// member normal in the previous one.
pub fn composition_chains() -> Result<Vec<(String, Vec<PermGroup>)>, EngineError> {
    let mut out = Vec::new();
    {
        // sym(4) > alt(4) > klein4 > C2 > 1
        let g = catalog_group("sym(4)")?;
        let a4 = alternating_group(4)?;
        let v4 = klein_in_degree4()?;
        let c2 = PermGroup::from_generators(
            "c2",
            4,
            vec![Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]])?],
        )?;
        let one = PermGroup::from_generators("1", 4, vec![])?;
        out.push(("sym(4)".to_string(), vec![g, a4, v4, c2, one]));
    }
    {
        // sym(5) > alt(5) > 1
        let g = catalog_group("sym(5)")?;
        let a5 = alternating_group(5)?;
        let one = PermGroup::from_generators("1", 5, vec![])?;
        out.push(("sym(5)".to_string(), vec![g, a5, one]));
    }
    {
        // frob18a > kernel > C3 > 1
        let g = catalog_group("frob18a")?;
        let (_, k) = catalog_normal_pair("frob18a:kernel9")?;
        let c3 = PermGroup::from_generators("c3", 9, vec![g.generators()[0].clone()])?;
        let one = PermGroup::from_generators("1", 9, vec![])?;
        out.push(("frob18a".to_string(), vec![g, k, c3, one]));
    }
    {
        // dihedral(15) > cyclic(15) > cyclic(5) > 1
        let g = catalog_group("dihedral(15)")?;
        let (_, c15) = catalog_normal_pair("dihedral(15):cyclic(15)")?;
        let (_, c5) = catalog_normal_pair("dihedral(15):cyclic(5)")?;
        let one = PermGroup::from_generators("1", 15, vec![])?;
        out.push(("dihedral(15)".to_string(), vec![g, c15, c5, one]));
    }
    Ok(out)
}

/// The deterministic corpus of catalog labels scanned by recognition and
/// the property sweeps, filtered by predicted order. The iteration order
/// fixes which alias becomes the canonical representative when entries
/// are isomorphic.
pub fn scan_corpus(max_order: u64) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for n in 2..=10u64 {
        out.push(format!("sym({n})"));
    }
    for n in 3..=10u64 {
        out.push(format!("alt({n})"));
    }
    out.push("frob18a".to_string());
    out.push("frob18b".to_string());
    for n in 3..=100u64 {
        out.push(format!("dihedral({n})"));
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32] {
        out.push(format!("psl2({q})"));
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19] {
        out.push(format!("pgl2({q})"));
    }
    for n in 1..=100u64 {
        out.push(format!("cyclic({n})"));
    }
    // a few fixed products give the sweeps some non-simple composites
    out.push("sym(3)xcyclic(5)".to_string());
    out.push("alt(4)xcyclic(5)".to_string());
    out.push("sym(3)xsym(3)".to_string());
    out.push("cyclic(2)xalt(5)".to_string());
    let cap = super::group::DEFAULT_ELEMENT_CAP as u64;
    out.retain(|label| predicted_order(label).is_some_and(|o| o <= max_order && o <= cap));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for (label, order) in [
            ("sym(4)", 24u64),
            ("alt(5)", 60),
            ("cyclic(5)", 5),
            ("dihedral(9)", 18),
            ("frob18a", 18),
            ("frob18b", 18),
            ("psl2(7)", 168),
            ("psl2(4)", 60),
            ("pgl2(5)", 120),
            ("sym(3)xcyclic(5)", 30),
        ] {
            let g = catalog_group(label).unwrap();
            assert_eq!(g.order().unwrap(), order, "{label}");
            assert_eq!(predicted_order(label), Some(order), "{label}");
        }
    }

    #[test]
    fn unknown_labels_rejected() {
        assert!(catalog_group("sporadic(1)").is_err());
        assert!(catalog_group("sym(11)").is_err());
        assert!(catalog_group("psl2(6)").is_err());
        assert!(catalog_group("psl2(64)").is_err());
    }

    #[test]
    fn cap_rejects_sym10() {
        // sym(10) has order 3628800, above the default cap
        assert!(matches!(
            catalog_group("sym(10)"),
            Err(EngineError::CapExceeded { .. })
        ));
    }

    #[test]
    fn frob18a_properties() {
        let g = catalog_group("frob18a").unwrap();
        assert_eq!(g.order().unwrap(), 18);
        assert_eq!(g.center_order().unwrap(), 1);
    }

    #[test]
    fn psl2_orders_match_formula() {
        for q in [2u16, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32] {
            let g = psl2(q).unwrap();
            let qq = q as u64;
            let expect = qq * (qq * qq - 1) / num_integer::gcd(2, qq - 1);
            assert_eq!(g.order().unwrap(), expect, "psl2({q})");
        }
        for q in [4u16, 5, 7, 8, 9, 11, 13, 16, 17, 19] {
            let g = pgl2(q).unwrap();
            let qq = q as u64;
            assert_eq!(g.order().unwrap(), qq * (qq * qq - 1), "pgl2({q})");
        }
    }

    #[test]
    fn normal_pairs_validate() {
        for label in normal_pair_labels() {
            let (g, k) = catalog_normal_pair(label).unwrap();
            assert!(k.is_normal_in(&g).unwrap(), "{label}");
        }
    }

    #[test]
    fn chains_are_subnormal() {
        for (label, chain) in composition_chains().unwrap() {
            for w in chain.windows(2) {
                assert!(
                    w[1].is_normal_in(&w[0]).unwrap(),
                    "{label}: {} not normal in {}",
                    w[1].name(),
                    w[0].name()
                );
            }
        }
    }

    #[test]
    fn corpus_respects_bound() {
        let corpus = scan_corpus(2000);
        assert!(corpus.iter().all(|l| predicted_order(l).unwrap() <= 2000));
        assert!(corpus.contains(&"psl2(13)".to_string()));
        assert!(!corpus.contains(&"psl2(16)".to_string())); // order 4080
        assert!(corpus.contains(&"sym(6)".to_string()));
        assert!(!corpus.contains(&"sym(7)".to_string()));
    }
}
