use eigengap::geometry::round::{h0, h0_samples};
use eigengap::geometry::{cylinder_to_potential, potential_to_cylinder, CylinderMetric};
use eigengap::numerics::Grid1D;

fn main() {
    let g = Grid1D::uniform(-12.0, 12.0, 2049).unwrap();
    let h_raw: Vec<f64> = g
        .nodes()
        .iter()
        .map(|&t| {
            let x: f64 = t.tanh();
            let psi = 0.3 * (-(x - 0.2f64).powi(2) / (2.0 * 0.35f64 * 0.35)).exp();
            h0(t) * psi.exp()
        })
        .collect();
    let raw = CylinderMetric::unnormalized(g.clone(), h_raw).unwrap();
    let scale = eigengap::geometry::TOTAL_AREA / raw.area();
    let h: Vec<f64> = raw.h().iter().map(|v| v * scale).collect();
    let c = CylinderMetric::new(g.clone(), h).unwrap();
    println!("centroid = {:.6}", c.centroid());
    let p = cylinder_to_potential(&c).unwrap();
    let c2 = potential_to_cylinder(&p).unwrap();
    let (fl, fr) = c2.boundary_log_slopes();
    println!("reconstructed slopes: {fl:.6} {fr:.6}");
    let m = g.len();
    for i in [0usize, 1, 2, 3] {
        println!("left  i={} h={:.6e} h0={:.6e} ratio={:.6}", i, c2.h()[i], h0(g.node(i)), c2.h()[i]/h0(g.node(i)));
    }
    for i in [m-4, m-3, m-2, m-1] {
        println!("right i={} h={:.6e} h0={:.6e} ratio={:.6}", i, c2.h()[i], h0(g.node(i)), c2.h()[i]/h0(g.node(i)));
    }
    // phi end behavior
    let phi = p.phi();
    println!("phi ends: {:.6e} {:.6e} {:.6e} | {:.6e} {:.6e} {:.6e}", phi[0], phi[1], phi[2], phi[m-3], phi[m-2], phi[m-1]);
}
