use super::{Result, Skeleton, SkeletonError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolytopeKind {
    /// α_n, the n-simplex: K_{n+1}.
    Simplex,
    /// β_n, the n-cross-polytope: the cocktail-party graph K_{n×2}.
    CrossPolytope,
    /// γ_n, the n-cube.
    Cube,
}

pub fn polytope_family(kind: PolytopeKind, n: usize) -> Result<Skeleton> {
    if n == 0 {
        return Err(SkeletonError::InvalidParameter("dimension must be at least 1".into()));
    }
    let (g, greek) = match kind {
        PolytopeKind::Simplex => (complete(n + 1)?, "alpha"),
        PolytopeKind::CrossPolytope => (cocktail_party(n)?, "beta"),
        PolytopeKind::Cube => (hypercube(n)?, "gamma"),
    };
    Ok(Skeleton { name: format!("{greek}{n}"), ..g })
}

pub fn complete(n: usize) -> Result<Skeleton> {
    if n == 0 {
        return Err(SkeletonError::InvalidParameter("K_n needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Skeleton::from_edges(format!("K{n}"), n, edges.collect::<Vec<_>>()))
}

/// K_{n×2}; vertices `2i` and `2i+1` form the i-th non-adjacent (antipodal) pair.
pub fn cocktail_party(n: usize) -> Result<Skeleton> {
    if n == 0 {
        return Err(SkeletonError::InvalidParameter("K_{n x 2} needs n >= 1".into()));
    }
    let m = 2 * n;
    let edges = (0..m).flat_map(|u| (u + 1..m).filter(move |&v| v / 2 != u / 2).map(move |v| (u, v)));
    Ok(Skeleton::from_edges(format!("K{n}x2"), m, edges.collect::<Vec<_>>()))
}

/// Q_m; vertex `x` is the binary word with bits of `x`.
pub fn hypercube(m: usize) -> Result<Skeleton> {
    if m == 0 || m > 20 {
        return Err(SkeletonError::InvalidParameter(format!("hypercube dimension {m} out of range 1..=20")));
    }
    let n = 1usize << m;
    let edges = (0..n).flat_map(|x| (0..m).map(move |b| (x, x ^ (1 << b))).filter(|&(x, y)| x < y));
    Ok(Skeleton::from_edges(format!("Q{m}"), n, edges.collect::<Vec<_>>()))
}

/// ½H_m: even-weight words of length m, adjacent at Hamming distance 2.
pub fn half_cube(m: usize) -> Result<Skeleton> {
    if !(2..=20).contains(&m) {
        return Err(SkeletonError::InvalidParameter(format!("half-cube dimension {m} out of range 2..=20")));
    }
    let words: Vec<usize> = (0..1usize << m).filter(|x| x.count_ones() % 2 == 0).collect();
    let mut edges = Vec::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if (words[i] ^ words[j]).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Ok(Skeleton::from_edges(format!("halfQ{m}"), words.len(), edges))
}

pub fn cycle(n: usize) -> Result<Skeleton> {
    if n < 3 {
        return Err(SkeletonError::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    Ok(Skeleton::from_edges(format!("C{n}"), n, (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()))
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Skeleton {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Skeleton::from_edges("petersen", 10, edges)
}

/// K_5 minus a triangle: vertices 0,1 are adjacent to everything, 2,3,4 are independent.
pub fn k5_minus_k3() -> Skeleton {
    Skeleton::from_edges("K5-K3", 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
}

/// Cartesian product C_a × C_b; vertex `(i, j)` is `i * b + j`.
pub fn cycle_product(a: usize, b: usize) -> Result<Skeleton> {
    if a < 3 || b < 3 {
        return Err(SkeletonError::InvalidParameter("cycle product needs a, b >= 3".into()));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            let v = i * b + j;
            edges.push((v, i * b + (j + 1) % b));
            edges.push((v, ((i + 1) % a) * b + j));
        }
    }
    Ok(Skeleton::from_edges(format!("C{a}xC{b}"), a * b, edges))
}

/// Adds one apex (the last vertex) adjacent to every vertex of `g`.
pub fn pyramid(g: &Skeleton) -> Skeleton {
    let apex = g.n;
    let edges = g.edges().chain((0..g.n).map(|v| (v, apex))).collect::<Vec<_>>();
    Skeleton::from_edges(format!("pyramid({})", g.name), g.n + 1, edges)
}

/// Points of Z^m with l1 norm at most `r`, joined at unit distance; points of norm
/// at most `r - 1` are core.
pub fn lattice_ball(m: usize, r: usize) -> Result<Skeleton> {
    if m == 0 || m > 8 {
        return Err(SkeletonError::InvalidParameter(format!("lattice dimension {m} out of range 1..=8")));
    }
    let r_i = r as i64;
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &points {
            let used: i64 = p.iter().map(|x| x.abs()).sum();
            for x in -(r_i - used)..=(r_i - used) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        points = next;
    }
    points.sort_by_key(|p| (p.iter().map(|x| x.abs()).sum::<i64>(), p.clone()));
    let index: std::collections::HashMap<Vec<i64>, usize> =
        points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for axis in 0..m {
            let mut q = p.clone();
            q[axis] += 1;
            if let Some(&j) = index.get(&q) {
                edges.push((i, j));
            }
        }
    }
    let mut g = Skeleton::from_edges(format!("Z{m}ball{r}"), points.len(), edges);
    g.core = Some(points.iter().map(|p| p.iter().map(|x| x.abs()).sum::<i64>() < r_i).collect());
    g.coords = Some(points.iter().map(|p| p.iter().map(|&x| x as f64).collect()).collect());
    Ok(g)
}

/// Resolves names such as `petersen`, `K6`, `K4x2`, `Q3`, `halfQ6`, `C12`,
/// `C3xC3`, `K5-K3`, `alpha4`, `beta5`, `gamma3`.
pub fn named_graph(name: &str) -> Result<Skeleton> {
    let unknown = || SkeletonError::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let n = name.trim();
    if n.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    if n == "K5-K3" {
        return Ok(k5_minus_k3());
    }
    if let Some(rest) = n.strip_prefix("halfQ") {
        return half_cube(num(rest)?);
    }
    if let Some(rest) = n.strip_prefix("alpha") {
        return polytope_family(PolytopeKind::Simplex, num(rest)?);
    }
    if let Some(rest) = n.strip_prefix("beta") {
        return polytope_family(PolytopeKind::CrossPolytope, num(rest)?);
    }
    if let Some(rest) = n.strip_prefix("gamma") {
        return polytope_family(PolytopeKind::Cube, num(rest)?);
    }
    if let Some(rest) = n.strip_prefix('Q') {
        return hypercube(num(rest)?);
    }
    if let Some(rest) = n.strip_prefix('K') {
        let rest = rest.trim_start_matches('_').trim_start_matches('{').trim_end_matches('}');
        if let Some(pairs) = rest.strip_suffix("x2").or_else(|| rest.strip_suffix("×2")) {
            return cocktail_party(num(pairs)?);
        }
        return complete(num(rest)?);
    }
    if let Some(rest) = n.strip_prefix('C') {
        if let Some((a, b)) = rest.split_once("xC") {
            return cycle_product(num(a)?, num(b)?);
        }
        return cycle(num(rest)?);
    }
    Err(unknown())
}
