#!/usr/bin/env python3
"""Generate the embedded 145 x 3 summary-data simulation template.

The template stands in for a lipid-style three-exposure instrument panel
(LDL-C, HDL-C, TG order) with an outcome standard error per SNP. Values are
true SNP-exposure effects and standard errors; the simulator divides the first
column (or all columns) by the divisor D before sampling.

Generating rule (deterministic, seed 20240611):
  1. Minor allele frequencies maf_j ~ U(0.05, 0.5); genotype variance
     v_j = 2 maf_j (1 - maf_j).
  2. Raw effects: multivariate normal with genetic correlation
     [[1, 0.3, 0.1], [0.3, 1, -0.45], [0.1, -0.45, 1]], divided by
     sqrt(v_j) so that per-SNP variance explained is exchangeable across MAF,
     then multiplied by a heavy-tail factor |t_5| / E|t_5|.
  3. Standard errors: se_xjk = base_k / sqrt(v_j) with base = (1, 0.9, 1.1)
     relative units; se_yj = base_y / sqrt(v_j).
  4. Column scales are fitted so the oracle conditional F-statistics after
     dividing column 1 by 2.5 equal (8.8, 37.4, 22.5); base_y is fitted so
     the asymptotic SRIVW standard error for beta_01 is 0.033 at
     beta_0 = (0.8, 0.4, 0).

Writes data/summary_template.tsv and src/mvmr/summary_template.cpp.
"""
import pathlib

import numpy as np

P, K = 145, 3
SEED = 20240611
SIGMA = np.array([[1.0, -0.1, -0.05], [-0.1, 1.0, 0.2], [-0.05, 0.2, 1.0]])
TARGET_F = np.array([8.8, 37.4, 22.5])
BETA_A = np.array([0.8, 0.4, 0.0])
ROOT = pathlib.Path(__file__).resolve().parent.parent


def sym_sqrt(a):
    w, u = np.linalg.eigh(a)
    return u @ np.diag(np.sqrt(w)) @ u.T


def oracle_f(g, se):
    p, k = g.shape
    out = np.empty(k)
    for c in range(k):
        others = [i for i in range(k) if i != c]
        w = se[:, c] ** -2
        x = g[:, others]
        coef = np.linalg.solve(x.T @ (w[:, None] * x), x.T @ (w * g[:, c]))
        delta = np.empty(k)
        delta[c] = -1.0
        delta[others] = coef
        num = (g @ delta) ** 2
        den = np.array([delta @ (np.diag(s) @ SIGMA @ np.diag(s)) @ delta for s in se])
        out[c] = np.sum(num / den) / (p - (k - 1))
    return out


def strength(g, se):
    s_inv = np.linalg.inv(sym_sqrt(SIGMA))
    z = g / se
    return s_inv @ (z.T @ z) @ s_inv


def srivw_se(g, se, sey, beta):
    m = np.zeros((K, K))
    vv = np.zeros((K, K))
    for j in range(P):
        sx = np.diag(se[j]) @ SIGMA @ np.diag(se[j])
        mj = np.outer(g[j], g[j]) / sey[j] ** 2
        vj = sx / sey[j] ** 2
        m += mj
        vv += (1 + beta @ vj @ beta) * (mj + vj) + vj @ np.outer(beta, beta) @ vj
    mi = np.linalg.inv(m)
    return np.sqrt(np.diag(mi @ vv @ mi))


def main():
    rng = np.random.default_rng(SEED)
    maf = rng.uniform(0.05, 0.5, P)
    v = 2 * maf * (1 - maf)
    gcorr = np.array([[1, 0.3, 0.1], [0.3, 1, -0.45], [0.1, -0.45, 1]])
    raw = rng.multivariate_normal(np.zeros(K), gcorr, P)
    t = np.abs(rng.standard_t(5, P))
    raw *= (t / np.mean(t))[:, None]
    raw /= np.sqrt(v)[:, None]
    se = np.outer(1 / np.sqrt(v), [1.0, 0.9, 1.1]) * 1e-3
    g = raw * 1e-3
    div = np.array([2.5, 1.0, 1.0])
    for _ in range(200):
        f = oracle_f(g / div, se)
        g *= np.sqrt(TARGET_F / f)[None, :]
    sey = 1e-3 / np.sqrt(v)
    for _ in range(50):
        cur = srivw_se(g / div, se, sey, BETA_A)[0]
        sey *= 0.033 / cur
    sig_digits = 6
    g = np.round(g, sig_digits + 2)
    se = np.round(se, sig_digits + 2)
    sey = np.round(sey, sig_digits + 2)

    for d in (2.5, 5.5, 9.25):
        gd = g.copy()
        gd[:, 0] /= d
        lam = np.linalg.eigvalsh(strength(gd, se)).min()
        print(f"D={d}: true lambda_min/sqrt(p)={lam / np.sqrt(P):.2f} "
              f"oracle F={np.round(oracle_f(gd, se), 2)} "
              f"SRIVW se={np.round(srivw_se(gd, se, sey, BETA_A), 4)}")

    lines = ["snp\tbeta_x1\tbeta_x2\tbeta_x3\tse_x1\tse_x2\tse_x3\tbeta_y\tse_y"]
    for j in range(P):
        vals = list(g[j]) + list(se[j]) + [0.0, sey[j]]
        lines.append(f"snp{j + 1:03d}\t" + "\t".join(repr(float(x)) for x in vals))
    (ROOT / "data").mkdir(exist_ok=True)
    (ROOT / "data" / "summary_template.tsv").write_text("\n".join(lines) + "\n")

    rows = ",\n".join(
        "    {" + ", ".join(repr(float(x)) for x in list(g[j]) + list(se[j]) + [sey[j]]) + "}"
        for j in range(P))
    cpp = f"""// Generated by tools/make_template.py; do not edit by hand.

#include "mvmr/summary_template.hpp"

#include <array>

namespace mvmr {{

namespace {{

// gamma_1..3, se_x1..3, se_y
constexpr std::array<std::array<double, 7>, {P}> kTemplateRows{{{{
{rows}
}}}};

}}  // namespace

TemplateTable embedded_template() {{
  TemplateTable t;
  t.gammas.resize({P}, 3);
  t.se_x.resize({P}, 3);
  t.se_y.resize({P});
  for (std::size_t j = 0; j < kTemplateRows.size(); ++j) {{
    const auto& r = kTemplateRows[j];
    const auto row = static_cast<Eigen::Index>(j);
    for (Eigen::Index k = 0; k < 3; ++k) {{
      t.gammas(row, k) = r[static_cast<std::size_t>(k)];
      t.se_x(row, k) = r[static_cast<std::size_t>(k) + 3];
    }}
    t.se_y(row) = r[6];
  }}
  return t;
}}

}}  // namespace mvmr
"""
    (ROOT / "src" / "mvmr").mkdir(parents=True, exist_ok=True)
    (ROOT / "src" / "mvmr" / "summary_template.cpp").write_text(cpp)


if __name__ == "__main__":
    main()
