// temporary development probe, removed before release
use std::time::Instant;

use watchsys::graph::Graph;
use watchsys::solver::{watching_number, SolverBudget};

fn gadget_expand(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges();
    let mut out = Vec::new();
    for (e, &(x, y)) in edges.iter().enumerate() {
        let a = n + 2 * e;
        let b = n + 2 * e + 1;
        out.push((x, a));
        out.push((y, a));
        out.push((a, b));
    }
    Graph::from_edge_list(n + 2 * edges.len(), &out).unwrap()
}

#[test]
#[ignore]
fn probe_reduction_solves() {
    for n in [3usize, 4, 5] {
        let g = Graph::cycle(n).unwrap();
        let gp = gadget_expand(&g);
        let t = Instant::now();
        let res = watching_number(&gp, 1, 1, &SolverBudget::large()).unwrap();
        println!(
            "C_{n} gadget: n'={} w={} explored={} in {:?}",
            gp.order(),
            res.optimum,
            res.explored,
            t.elapsed()
        );
    }
}

#[test]
#[ignore]
fn probe_level2_paths() {
    for n in 1..=8 {
        let g = Graph::path(n).unwrap();
        let t = Instant::now();
        let res = watching_number(&g, 1, 2, &SolverBudget::large()).unwrap();
        println!("P_{n} ell=2: w={} explored={} in {:?}", res.optimum, res.explored, t.elapsed());
    }
}

#[test]
#[ignore]
fn probe_level2_cycles() {
    for n in 3..=11 {
        let g = Graph::cycle(n).unwrap();
        let t = Instant::now();
        let res = watching_number(&g, 1, 2, &SolverBudget::large()).unwrap();
        println!("C_{n} ell=2: w={} explored={} in {:?}", res.optimum, res.explored, t.elapsed());
        println!("  cert: {}", res.certificate.to_json().replace('\n', " "));
    }
}

#[test]
#[ignore]
fn probe_level3() {
    for n in 1..=7 {
        let g = Graph::path(n).unwrap();
        let t = Instant::now();
        let res = watching_number(&g, 1, 3, &SolverBudget::large()).unwrap();
        println!("P_{n} ell=3: w={} explored={} in {:?}", res.optimum, res.explored, t.elapsed());
        if n >= 3 {
            let g = Graph::cycle(n).unwrap();
            let t = Instant::now();
            let res = watching_number(&g, 1, 3, &SolverBudget::large()).unwrap();
            println!("C_{n} ell=3: w={} explored={} in {:?}", res.optimum, res.explored, t.elapsed());
        }
    }
}
