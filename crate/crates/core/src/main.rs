use nalgebra::{DMatrix, Complex};
use clarabel::algebra::*;
use clarabel::solver::*;

fn main() {
    // 1. complex Hermitian eigendecomposition
    let h = DMatrix::<Complex<f64>>::from_row_slice(2, 2, &[
        Complex::new(1.0, 0.0), Complex::new(0.0, -1.0),
        Complex::new(0.0, 1.0), Complex::new(1.0, 0.0),
    ]);
    let eig = h.clone().symmetric_eigen();
    println!("eigenvalues = {:?}", eig.eigenvalues.as_slice());
    let recon = &eig.eigenvectors
        * DMatrix::from_diagonal(&eig.eigenvalues.map(|v| Complex::new(v, 0.0)))
        * eig.eigenvectors.adjoint();
    println!("recon residual = {:.3e}", (&recon - &h).norm());

    // 2. trivially infeasible LP: x = -1, x >= 0
    // rows: [eq: 1*x = -1 (Zero)], [nonneg: -1*x + s = 0, s>=0]
    let p = CscMatrix::identity(1);
    let q = vec![0.0];
    let a = CscMatrix::new(2, 1, vec![0, 2], vec![0, 1], vec![1.0, -1.0]);
    let b = vec![-1.0, 0.0];
    let cones = [ZeroConeT(1), NonnegativeConeT(1)];
    let mut settings = DefaultSettings::default();
    settings.verbose = false;
    let mut solver = DefaultSolver::new(&p, &q, &a, &b, &cones, settings).unwrap();
    solver.solve();
    println!("status = {:?}", solver.solution.status);
    println!("x = {:?}, z = {:?}, s = {:?}", solver.solution.x, solver.solution.z, solver.solution.s);

    // 3. tiny SDP: find x with [[x, 0.5],[0.5, x]] psd, minimize x -> x = 0.5.
    // svec (upper-tri col-major, sqrt2 off-diag): s = [x, 0.5*sqrt2, x]
    // A x + s = b with s in PSDTriangle(2): s = b - A x => A = [[-1],[0],[-1]], b = [0, 0.5*sqrt2, 0]
    let p2 = CscMatrix::zeros((1, 1));
    let q2 = vec![1.0];
    let a2 = CscMatrix::new(3, 1, vec![0, 2], vec![0, 2], vec![-1.0, -1.0]);
    let b2 = vec![0.0, 0.5 * 2f64.sqrt(), 0.0];
    let cones2 = [PSDTriangleConeT(2)];
    let mut settings2 = DefaultSettings::default();
    settings2.verbose = false;
    let mut solver2 = DefaultSolver::new(&p2, &q2, &a2, &b2, &cones2, settings2).unwrap();
    solver2.solve();
    println!("sdp status = {:?}, x = {:?} (expect 0.5)", solver2.solution.status, solver2.solution.x);
}
