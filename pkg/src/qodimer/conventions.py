"""Convention ledger: every sign/normalization choice that is not forced algebraically.

Each entry lists the adopted convention and the rejected alternative, plus the
numerical check that adjudicates between them.  The sha256 of this text is
stamped into every emitted metadata sidecar so result files can be traced to
the exact convention set that produced them.

1. Squeeze parameter of the complete model.
   Adopted:  r_pm = (1/4) ln(1 pm 2 lam/omega).
   Rejected: r_pm = ln(1 pm 2 lam/omega).
   Adjudicator: the truncated-space spectrum.  Only the adopted form makes
   Omega_pm = omega cosh(2 r_pm) pm lam e^{-2 r_pm} equal the physical normal
   modes omega sqrt(1 pm 2 lam/omega); the rejected form predicts mode gaps
   {1.125, 1.458}*omega instead of {0.707, 1.225}*omega at lam = 0.25 omega.

2. Two-qubit basis and ordering.
   Basis {ee, eg, ge, gg}, first letter qubit A, sigma_z|e> = +|e>.
   All 4x4 indexing, coherence labels and the oracle's qubit blocks follow it.

3. Squeezed coherent states and their overlap.
   State definition |Y, xi> = D(Y) S(xi)|0> with the squeeze convention
   S(xi) = exp[(conj(xi) a^2 - xi a'^2)/2]; overlap of equal-squeeze states
     Theta = exp(i Im(conj(Y_m) Y_n)) exp(-|d'|^2/2),
     d' = d cosh|xi| + conj(d) e^{i arg xi} sinh|xi|,  d = Y_n - Y_m.
   With the squeeze argument xi(t) = -r e^{-2i Omega t} this makes S(xi(0))
   exactly the squeeze that decouples the modes.
   Rejected: the opposite Bogoliubov sign (- on the sinh term), which breaks
   the link |Theta|^2 = e^{-f} between overlaps and the closed-form purity.
   Adjudicators: reduction to the coherent overlap at xi=0, a truncated-Fock
   inner-product oracle, and the element-wise master-equation comparison.

4. Mode-decoherence exponent.
   Adopted:  f_pm = 16 lam_pm^2 [cosh(2 r_pm) + sinh(2 r_pm) cos(Omega_pm t)]
             sin^2(Omega_pm t / 2), with the signed r_pm of entry 1.
   Rejected: the same bracket with a minus sign on the sinh term.
   Adjudicator: |rho_egge| and |rho_eegg| from the brute-force Lindblad
   oracle; the rejected sign misses the measured envelopes by exactly twice
   the sinh term.  (Equivalent statement: the rejected form is the adopted
   one evaluated at -r.)

5. Coherent phase corrections of the dephasing factors.
   Adopted building blocks (see analytic.phase_terms):
     A_s(t) = 3 lam_+ conj(Z)(1 - e^{i Omega_+ t}) - 2 s lam_+^2 e^{i Omega_+ t},
     B_s(t) likewise with (lam_-, W, Omega_-),
   entering gamma_mn exactly in the template
     eeeg: e^{2i Im[A_+ + B_-]},  eege: e^{2i Im[A_+ - B_+]},
     eegg: e^{2i Im[A_+ + A_-]},  egge: e^{-2i Im[B_+ + B_-]},
     eggg: e^{2i Im[A_- - B_-]},  gegg: e^{2i Im[A_- + B_+]}.
   Rejected: the same template with first-term coefficient 1 instead of 3
   (equivalently lam conj(X) - lam (conj(X) + 2 s lam) e^{i Omega t}).
   Adjudicator: element-wise comparison of the full complex density matrix
   against the Lindblad oracle (machine precision for the adopted form,
   O(lam_pm |X|) phase errors for the rejected one).

6. Purity normalization.
   Gamma(t) = (1/16)[4 e^{-(f_+ + f_- + 2 gamma t)} + e^{-4(f_+ + gamma t)}
              + e^{-4(f_- + gamma t)}], P = 1/4 + 2 Gamma.  The 1/16 keeps
   P(0) = 1 exactly (each density-matrix entry carries its own 1/4).

7. Beam-splitter direction.
   T = exp((pi/4)(a'b - a b')) maps the initial amplitudes to
   z = (alpha + beta + 2 delta)/sqrt(2) on the + mode and
   w = (beta - alpha)/sqrt(2) on the - mode.  Adjudicator: the
   transformation-chain residual (the opposite direction leaves the
   quadrature coupling undiagonalized).

8. Constant energy offsets.
   Dropped everywhere; all spectral comparisons use gaps, and the chain check
   fits one free constant on the interior block.
"""

import hashlib

CONVENTIONS_TEXT = __doc__

CONVENTIONS_HASH = hashlib.sha256(CONVENTIONS_TEXT.encode()).hexdigest()
