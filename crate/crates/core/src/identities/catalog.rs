use super::{arith, exp, muntz, summation, theta, Evaluator, IdentityEntry, Point, Tolerance};

fn entry(id: &'static str, description: &'static str, anchor: &'static str, domain: Vec<Point>, tolerance: Tolerance, lhs: Evaluator, rhs: Evaluator) -> IdentityEntry {
    IdentityEntry { id, description, anchor, domain, tolerance, function: None, notes: Vec::new(), lhs, rhs, hypothesis: None }
}

impl IdentityEntry {
    fn with_function(mut self, name: &'static str) -> Self {
        self.function = Some(name);
        self
    }

    fn with_note(mut self, note: &'static str) -> Self {
        self.notes.push(note);
        self
    }

    fn with_hypothesis(mut self, check: super::HypothesisCheck) -> Self {
        self.hypothesis = Some(check);
        self
    }
}

fn xs(v: &[f64]) -> Vec<Point> {
    v.iter().map(|&x| Point::x(x)).collect()
}

fn ss(v: &[(f64, f64)]) -> Vec<Point> {
    v.iter().map(|&(re, im)| Point::s(re, im)).collect()
}

fn ramanujan() -> Vec<IdentityEntry> {
    let tol = Tolerance::abs(1e-6);
    let right = ss(&[(2.0, 0.0), (2.5, 0.0), (3.0, 1.0)]);
    let shifted = ss(&[(2.5, 0.0), (3.0, 1.0)]);
    vec![
        entry("ramanujan-1.7", "Σ 2^ω(n) n^-s = ζ(s)²/ζ(2s)", "generating series of the number of squarefree divisors", right.clone(), tol, arith::lhs_1_7, arith::rhs_1_7),
        entry("ramanujan-1.8", "Σ d(n) n^-s = ζ(s)²", "divisor function as the square of zeta", right.clone(), tol, arith::lhs_1_8, arith::rhs_1_8),
        entry(
            "ramanujan-1.9",
            "Σ d_k(n) n^-s = ζ(s)^k",
            "k-fold divisor function as the k-th power of zeta",
            right.iter().map(|p| p.with_k(3)).collect(),
            tol,
            arith::lhs_1_9,
            arith::rhs_1_9,
        ),
        entry("ramanujan-1.10", "Σ μ(n) n^-s = 1/ζ(s)", "Möbius inversion of the zeta series", right.clone(), tol, arith::lhs_1_10, arith::rhs_1_10),
        entry("ramanujan-1.11", "Σ |μ(n)| n^-s = ζ(s)/ζ(2s)", "indicator of squarefree integers", right.clone(), tol, arith::lhs_1_11, arith::rhs_1_11),
        entry("ramanujan-1.12", "Σ λ(n) n^-s = ζ(2s)/ζ(s)", "Liouville function, completely multiplicative sign", right.clone(), tol, arith::lhs_1_12, arith::rhs_1_12),
        entry("ramanujan-1.13", "Σ d(n²) n^-s = ζ(s)³/ζ(2s)", "divisor count of squares", right.clone(), tol, arith::lhs_1_13, arith::rhs_1_13),
        entry("ramanujan-1.14", "Σ d(n)² n^-s = ζ(s)⁴/ζ(2s)", "squared divisor count", right, tol, arith::lhs_1_14, arith::rhs_1_14),
        entry("ramanujan-1.15", "Σ φ(n) n^-s = ζ(s-1)/ζ(s)", "Euler totient, valid for Re s > 2", shifted.clone(), tol, arith::lhs_1_15, arith::rhs_1_15),
        entry(
            "ramanujan-1.16",
            "Σ a(n) n^-s = (1-2^{1-s})/(1-2^{-s}) ζ(s-1)",
            "largest odd divisor, valid for Re s > 2",
            shifted,
            tol,
            arith::lhs_1_16,
            arith::rhs_1_16,
        ),
    ]
}

fn theta_family() -> Vec<IdentityEntry> {
    let grid = xs(&[0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0]);
    let three = xs(&[0.5, 1.0, 2.0]);
    vec![
        entry(
            "theta-3.6",
            "(1+2ψ(x))/(1+2ψ(1/x)) = 1/√x",
            "Jacobi theta transformation written through ψ",
            grid,
            Tolerance::abs(1e-12),
            theta::lhs_3_6,
            theta::rhs_3_6,
        ),
        entry(
            "theta-3.7",
            "1/(e^{πx}-1) = Σ_{n squarefree} ψ(nx)",
            "geometric series of e^{-πx} regrouped by the square part of the index",
            three.clone(),
            Tolerance::abs(1e-12),
            theta::lhs_3_7,
            theta::rhs_3_7,
        ),
        entry("psi-series-3.8", "Σ_n ψ(nx) = Σ_n 1/(e^{n²πx}-1)", "double Gaussian sum summed in both orders", three.clone(), Tolerance::abs(1e-12), theta::lhs_3_8, theta::rhs_3_8),
        entry(
            "theta-reciprocal-3.12",
            "ψ(x) = Σ_m μ(m) Ψ(mx)",
            "Möbius inversion of Ψ(x) = Σ ψ(nx)",
            three.clone(),
            Tolerance::abs(1e-12),
            theta::lhs_3_12,
            theta::rhs_3_12,
        ),
        entry(
            "reduced-theta-3.14",
            "ψ̂(x) = 3/(π²√x) + Σ μ(n)[ψ(1/(n⁴x))/(n²√x) - 1/2]",
            "squarefree theta sum transformed termwise by the theta functional equation",
            three.clone(),
            Tolerance::abs(1e-10),
            theta::lhs_3_14,
            theta::rhs_3_14,
        ),
        entry(
            "reduced-theta-mellin-3.15",
            "∫_0^∞ x^{s/2-1} ψ̂(x) dx = π^{-s/2} Γ(s/2) ζ(s)/ζ(2s)",
            "Mellin transform of the squarefree theta sum, Re s > 1",
            ss(&[(3.0, 0.0), (4.0, 1.0)]),
            Tolerance::abs(1e-8),
            theta::lhs_3_15,
            theta::rhs_3_15,
        ),
        entry(
            "theta-muntz-3.10",
            "∫_0^∞ x^{s-1}(Ψ(x) - π/(6x)) dx = π^{-s} Γ(s) ζ(s) ζ(2s)",
            "Müntz transform of the Gaussian, strip 1/2 < Re s < 1",
            ss(&[(0.75, 0.0), (0.6, 2.0)]),
            Tolerance::abs(1e-8),
            theta::lhs_3_10,
            theta::rhs_psi_mellin,
        ),
        entry(
            "theta-muntz-3.11",
            "∫_0^∞ x^{s-1}(Ψ(x) - π/(6x) - ζ(1/2)/(2√x)) dx = π^{-s} Γ(s) ζ(s) ζ(2s)",
            "continuation of the previous transform past the pole at s = 1/2, strip 0 < Re s < 1/2",
            ss(&[(0.25, 0.0), (0.3, 2.0)]),
            Tolerance::abs(1e-8),
            theta::lhs_3_11,
            theta::rhs_psi_mellin,
        )
        .with_note("compensating coefficient is ζ(1/2)/2, the residue at s = 1/2; a plain ζ(1/2) leaves a residual"),
        entry(
            "representation-3.17",
            "π^{-s/2} Γ(s/2) ζ(s)/ζ(2s) = 6/(π²(s-1)) + Cauchy integral on Re w = 3/4 + entire part",
            "splitting of the squarefree theta transform at x = 1",
            ss(&[(2.0, 0.0), (3.0, 0.0)]),
            Tolerance::abs(1e-9),
            theta::lhs_3_17,
            theta::rhs_3_17,
        ),
        entry(
            "constant-12-pi2",
            "12/π² from the representation at s = 1/2",
            "value of the squarefree transform at s = 1/2 where ζ(1) cancels",
            ss(&[(0.5, 0.0)]),
            Tolerance::abs(1e-9),
            theta::lhs_constant,
            theta::rhs_constant,
        ),
        entry(
            "theta-expansion-2.6",
            "Θf(x) = Σ_n (Θ̂f)(n²x)",
            "Möbius sum split over the square part of the index",
            three,
            Tolerance::abs(1e-12),
            theta::lhs_2_6,
            theta::rhs_2_6,
        )
        .with_function("exp-pi"),
    ]
}

fn exp_family() -> Vec<IdentityEntry> {
    let three = xs(&[0.5, 1.0, 2.0]);
    let tol = Tolerance::abs(1e-10);
    vec![
        entry(
            "exp-3.1",
            "Σ_{n squarefree} e^{-nx} = 6/(xπ²) + Σ μ(n)[Σ_m 2n²x/(4π²m²+n⁴x²) - 1/2]",
            "e^{-x} in the Möbius Poisson formula",
            three.clone(),
            tol,
            exp::lhs_3_1,
            exp::rhs_3_1,
        ),
        entry(
            "exp-3.2",
            "Σ μ(n)/(e^{n²x}-1) = 6/(xπ²) + (1/2) Σ μ(n)/cosh(n²x)",
            "closed form of the inner sum, stated with a hyperbolic cosine",
            three.clone(),
            tol,
            exp::lhs_3_2,
            exp::rhs_3_2_cosh,
        )
        .with_note("false in the cosh form: the inner sum closes to coth(n²x/2)/2 - 1/(n²x), not a cosh term; see exp-3.2-coth"),
        entry(
            "exp-3.2-coth",
            "Σ μ(n)/(e^{n²x}-1) = 6/(xπ²) + (1/2) Σ μ(n)[coth(n²x/2) - 1 - 2/(n²x)]",
            "closed form of the inner sum with the cotangent partial fractions",
            three.clone(),
            tol,
            exp::lhs_3_2,
            exp::rhs_3_2_coth,
        ),
        entry(
            "exp-3.3",
            "Σ_{n squarefree} 2x/(n²+x²) = Σ μ(n)[π/n² coth(πx/n²) - 1/x]",
            "Möbius Poisson formula for the Poisson kernel 1/(1+t²)",
            three.clone(),
            Tolerance::abs(1e-9),
            exp::lhs_3_3,
            exp::rhs_3_3,
        ),
        entry(
            "exp-3.4",
            "Σ_{μ(n)=0} e^{-nx} = 1/(e^x-1) - 6/(xπ²) - (1/2) Σ μ(n)/cosh(n²x)",
            "complement of the squarefree exponential sum, cosh form",
            xs(&[1.0]),
            tol,
            exp::lhs_3_4,
            exp::rhs_3_4_cosh,
        )
        .with_note("inherits the cosh defect of exp-3.2; the series form exp-3.4-series holds"),
        entry(
            "exp-3.4-series",
            "Σ_{μ(n)=0} e^{-nx} = Σ_{n≥2} μ(n)/(1-e^{n²x})",
            "complement of the squarefree exponential sum as a Möbius series",
            three.clone(),
            tol,
            exp::lhs_3_4,
            exp::rhs_3_4_series,
        ),
        entry("lambert", "e^{-x} = Σ μ(n)/(e^{nx}-1)", "Möbius inversion of the geometric Lambert series", three, tol, exp::lhs_lambert, exp::rhs_lambert),
    ]
}

fn operator_sums() -> Vec<IdentityEntry> {
    let three = xs(&[0.5, 1.0, 2.0]);
    let tol = Tolerance::abs(1e-8);
    let zero_sides = "the left side cancels termwise, so the formula holds exactly when ∫f = ∫yf = 0; the default test function has both moments zero";
    vec![
        entry(
            "mobius-expansion-1.17",
            "Σ_n μ(n) Σ_m f(xnm) = f(x)",
            "Möbius inversion of the summation operator",
            three.clone(),
            tol,
            summation::lhs_1_17,
            summation::rhs_1_17,
        )
        .with_function("exp"),
        entry("liouville-2.13", "Σ f(n²x) = Σ (Λf)(nx)", "squares detected by the Liouville function", three.clone(), tol, summation::lhs_2_13, summation::rhs_2_13).with_function("exp"),
        entry("weighted-2.24", "Σ n f(xn) = Σ (Φf)(nx)", "totient summed over divisors gives the identity weight", three.clone(), tol, summation::lhs_2_24, summation::rhs_2_24).with_function("exp"),
        entry(
            "weighted-2.25",
            "(Af)(x) - (Af)(2x) = Σ [(Φf)(nx) - 2(Φf)(2nx)]",
            "largest odd divisor against the totient through the identity weight",
            three.clone(),
            tol,
            summation::lhs_2_25,
            summation::rhs_2_25,
        )
        .with_function("exp"),
        entry(
            "mobius-totient-2.26",
            "Σ φ(n) f(xn) - Σ_{n,m} m μ(n) f(nmx) = (6/π²) ∫ (1-y) f(xy) dy",
            "totient expanded as a Möbius convolution",
            three.clone(),
            tol,
            summation::lhs_2_26,
            summation::rhs_2_26,
        )
        .with_function("double-null")
        .with_note(zero_sides),
        entry(
            "mobius-totient-2.27",
            "Σ [a(n) - n] f(xn) + Σ_{n,m} n f(2^m xn) = (2/3) ∫ (1-y) f(xy) dy",
            "largest odd divisor through the powers of two",
            three.clone(),
            tol,
            summation::lhs_2_27,
            summation::rhs_2_27,
        )
        .with_function("double-null")
        .with_note(zero_sides),
        entry(
            "omega-sum",
            "Σ 2^ω(n) f(nx) = Σ (Θ̂f)(nx) - ∫ (Θ̂f)(xy) dy",
            "ζ²(s)/ζ(2s) as ζ(s) times the squarefree series",
            three.clone(),
            tol,
            summation::lhs_omega,
            summation::rhs_omega,
        )
        .with_function("vanish:2")
        .with_hypothesis(summation::hyp_omega),
        entry(
            "d-square-sum",
            "Σ d(n²) f(nx) = Σ d(n)(Θ̂f)(nx) - ∫ (Θ̂f)(xy)(log y + 2γ) dy",
            "ζ³(s)/ζ(2s) as ζ²(s) times the squarefree series",
            three.clone(),
            tol,
            summation::lhs_d_square,
            summation::rhs_d_square,
        )
        .with_function("vanish:3")
        .with_hypothesis(summation::hyp_d_square)
        .with_note("integral term uses the residue polynomial derived from the Laurent expansion of ζ²; it agrees with log y + 2γ"),
        entry(
            "d2-sum",
            "Σ d²(n) f(nx) = Σ d_3(n)(Θ̂f)(nx) - ∫ (Θ̂f)(xy) P_2(log y) dy",
            "ζ⁴(s)/ζ(2s) as ζ³(s) times the squarefree series",
            three,
            tol,
            summation::lhs_d2,
            summation::rhs_d2,
        )
        .with_function("vanish:4")
        .with_hypothesis(summation::hyp_d2)
        .with_note("P_2 is derived from the Laurent expansion of ζ³: log²y/2 + 3γ log y + 3γ² - 3γ_1 differs from the alternative form log²y + 3γ(log y + 2γ) + 3γ_1"),
    ]
}

fn poisson_family() -> Vec<IdentityEntry> {
    let three = xs(&[0.5, 1.0, 2.0]);
    vec![
        entry(
            "poisson-1.27",
            "√x [F_c f(0)/2 + Σ F_c f(nx)] = √(2π/x) [f(0)/2 + Σ f(2πn/x)]",
            "Poisson summation for the Fourier cosine transform",
            three.clone(),
            Tolerance::abs(1e-10),
            summation::lhs_1_27,
            summation::rhs_1_27,
        )
        .with_function("exp"),
        entry(
            "poisson-type-2.14",
            "Σ_{n squarefree} f(xn) = Σ μ(n) (Θf)(n²x)",
            "squarefree indicator as a Möbius sum over square divisors",
            three.clone(),
            Tolerance::abs(1e-10),
            summation::lhs_squarefree,
            summation::rhs_2_14,
        )
        .with_function("exp"),
        entry(
            "poisson-type-2.15",
            "Σ_{n squarefree} f(xn) = 3√2 F_c f(0)/(xπ√π) + Σ μ(n)[√(2π)/(n²x) Σ_m F_c f(2πm/(n²x)) - f(0)/2]",
            "Poisson summation applied inside the square-divisor expansion",
            three.clone(),
            Tolerance::abs(1e-10),
            summation::lhs_squarefree,
            summation::rhs_2_15,
        )
        .with_function("gauss"),
        entry(
            "poisson-type-2.16",
            "Σ_{n squarefree} f(xn) - 6∫f/(π²x) = 2^{-3/2} e^{-iπ/4} √x Σ_{n,m} μ(n) n^{-2} m^{-3/2} G(πx/(2n²m))",
            "error function kernel series for the squarefree sum",
            xs(&[1.0]),
            Tolerance::abs(1e-5),
            summation::lhs_2_16,
            summation::rhs_2_16,
        )
        .with_function("xexp")
        .with_hypothesis(summation::hyp_2_16)
        .with_note("the double series converges slowly in both indices; the reported bound covers the fitted column tails and the modelled columns beyond n = 15")
        .with_note("moving the inversion line from 1/2 < σ < 1 to σ < 0, where the double series is a Dirichlet expansion, crosses the poles of 1/ζ(2s) on Re s = 1/4; their residues sum to about -7.0e-5 at x = 1 and are not part of the right side"),
        entry(
            "voronoi-sum-1.40",
            "Vf(x) = f(0)/4 + (1/x) Σ d(n) G(n/x)",
            "Voronoi summation with the K₀/Y₀ kernel",
            three,
            Tolerance::abs(1e-5),
            summation::lhs_1_40,
            summation::rhs_1_40,
        )
        .with_function("exp"),
    ]
}

fn muntz_family() -> Vec<IdentityEntry> {
    let tol = Tolerance::abs(1e-5);
    let with_k = |k: u32, v: &[(f64, f64)]| ss(v).into_iter().map(|p| p.with_k(k)).collect::<Vec<_>>();
    vec![
        entry(
            "muntz-1.19",
            "∫_0^∞ x^{s-1} Pf(x) dx = ζ(s) f*(s), 0 < σ < 1",
            "Mellin transform of the Müntz operator",
            ss(&[(0.5, 3.0), (0.7, 0.0)]),
            tol,
            muntz::lhs_1_19,
            muntz::rhs_1_19,
        )
        .with_function("exp"),
        entry(
            "voronoi-muntz-1.38",
            "∫_0^∞ x^{s-1} Vf(x) dx = ζ(s)² f*(s), 0 < σ < 1",
            "Mellin transform of the Voronoi operator",
            ss(&[(0.5, 2.0), (0.7, 0.0)]),
            tol,
            muntz::lhs_1_38,
            muntz::rhs_1_38,
        )
        .with_function("exp"),
        entry(
            "reduced-muntz-2.5",
            "∫_0^∞ x^{s-1} [Θ̂f(x) - 6∫f/(π²x)] dx = ζ(s)/ζ(2s) f*(s), 1/2 < σ < 1",
            "Mellin transform of the compensated Möbius transform of the squares",
            ss(&[(0.75, 0.0), (0.8, 2.0)]),
            tol,
            muntz::lhs_2_5,
            muntz::rhs_2_5,
        )
        .with_function("exp"),
        entry(
            "totient-muntz-2.22",
            "∫_0^∞ x^{s-1} [Φf(x) - 6∫yf/(π²x²)] dx = ζ(s-1)/ζ(s) f*(s), 1 < σ < 2",
            "Mellin transform of the compensated totient operator",
            ss(&[(1.5, 0.0), (1.5, 2.0)]),
            tol,
            muntz::lhs_2_22,
            muntz::rhs_2_22,
        )
        .with_function("exp")
        .with_note("compensated by the residue at s = 2, that is 6∫yf/(π²x²); a 1/x compensation leaves the integral divergent in this strip"),
        entry(
            "odd-divisor-muntz-2.23",
            "∫_0^∞ x^{s-1} [Af(x) - 2∫yf/(3x²)] dx = (1-2^{1-s})/(1-2^{-s}) ζ(s-1) f*(s), 1 < σ < 2",
            "Mellin transform of the compensated odd-part divisor operator",
            ss(&[(1.5, 0.0), (1.5, 2.0)]),
            tol,
            muntz::lhs_2_23,
            muntz::rhs_2_23,
        )
        .with_function("xexp")
        .with_note("compensated by the residue at s = 2, that is 2∫yf/(3x²); a 1/x compensation leaves the integral divergent in this strip"),
        entry(
            "gen-voronoi-2.34",
            "∫_0^∞ x^{s-1} V_k f(x) dx = ζ(s)^k f*(s), max(0, 1-2/k) < σ < 1",
            "Mellin transform of the generalized Voronoi operator",
            [with_k(2, &[(0.5, 1.0), (0.6, 0.0)]), with_k(3, &[(0.5, 1.0), (0.6, 0.0)])].concat(),
            tol,
            muntz::lhs_2_34,
            muntz::rhs_2_34,
        )
        .with_function("exp")
        .with_hypothesis(muntz::hyp_2_34),
    ]
}

/// Every registered identity.
pub fn catalog() -> Vec<IdentityEntry> {
    let mut out = ramanujan();
    out.extend(theta_family());
    out.extend(exp_family());
    out.extend(operator_sums());
    out.extend(poisson_family());
    out.extend(muntz_family());
    out
}
