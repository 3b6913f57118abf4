#!/usr/bin/env python3
"""Generate the H2/STO-3G Pauli-sum fixtures under data/.

Computes the minimal-basis H2 integrals from scratch (s-type Gaussian
formulas, Szabo & Ostlund appendix A), runs the closed-form RHF + FCI for
the two-orbital problem, and emits two qubit encodings:

  data/h2_sto3g_2q.txt   2-qubit sector encoding.  Basis states |01>,|11>
                         hold the two closed-shell determinants (sigma_g^2,
                         sigma_u^2); |00>,|10> hold the open-shell singlet
                         and triplet.  The determinant pair differs in one
                         qubit, so the ground state is a product state.
  data/h2_sto3g_jw4.txt  Full Jordan-Wigner encoding on 4 spin orbitals,
                         ordered (g_up, g_dn, u_up, u_dn); Hartree-Fock is
                         |q0=1,q1=1,q2=0,q3=0>.

Pauli word convention: character i of a word acts on qubit i.
Coefficients include the nuclear repulsion (identity term), so the file's
ground energy is the total FCI energy.
"""

import numpy as np

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903
BOND_ANGSTROM = 0.7414

# STO-3G hydrogen 1s (zeta = 1.24 already folded into the exponents)
ALPHA = np.array([3.425250914, 0.6239137298, 0.1688554040])
COEF = np.array([0.1543289673, 0.5353281423, 0.4446345422])


def boys0_safe(t):
    from math import erf, sqrt, pi
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * sqrt(pi / t) * erf(sqrt(t))


def integrals(r_bohr):
    """AO integrals for two 1s STO-3G centers separated by r_bohr."""
    centers = [np.array([0.0, 0.0, 0.0]), np.array([0.0, 0.0, r_bohr])]
    prim = []  # (alpha, center, norm*coef)
    for c in centers:
        for a, d in zip(ALPHA, COEF):
            prim.append((a, c, d * (2.0 * a / np.pi) ** 0.75))

    nprim = len(prim)
    ao_of = [0] * 3 + [1] * 3

    S = np.zeros((2, 2))
    T = np.zeros((2, 2))
    V = np.zeros((2, 2))
    for i in range(nprim):
        ai, ri, ni = prim[i]
        for j in range(nprim):
            aj, rj, nj = prim[j]
            p = ai + aj
            mu = ai * aj / p
            rij2 = float(np.dot(ri - rj, ri - rj))
            pref = ni * nj * np.exp(-mu * rij2)
            s = pref * (np.pi / p) ** 1.5
            t = pref * mu * (3.0 - 2.0 * mu * rij2) * (np.pi / p) ** 1.5
            rp = (ai * ri + aj * rj) / p
            v = 0.0
            for rc in centers:
                pc2 = float(np.dot(rp - rc, rp - rc))
                v += -1.0 * pref * (2.0 * np.pi / p) * boys0_safe(p * pc2)
            S[ao_of[i], ao_of[j]] += s
            T[ao_of[i], ao_of[j]] += t
            V[ao_of[i], ao_of[j]] += v

    eri = np.zeros((2, 2, 2, 2))  # chemist notation (ab|cd)
    for i in range(nprim):
        ai, ri, ni = prim[i]
        for j in range(nprim):
            aj, rj, nj = prim[j]
            p = ai + aj
            rp = (ai * ri + aj * rj) / p
            eij = np.exp(-ai * aj / p * float(np.dot(ri - rj, ri - rj)))
            for k in range(nprim):
                ak, rk, nk = prim[k]
                for l in range(nprim):
                    al, rl, nl = prim[l]
                    q = ak + al
                    rq = (ak * rk + al * rl) / q
                    ekl = np.exp(-ak * al / q * float(np.dot(rk - rl, rk - rl)))
                    pq2 = float(np.dot(rp - rq, rp - rq))
                    val = (
                        ni * nj * nk * nl * eij * ekl
                        * 2.0 * np.pi ** 2.5
                        / (p * q * np.sqrt(p + q))
                        * boys0_safe(p * q / (p + q) * pq2)
                    )
                    eri[ao_of[i], ao_of[j], ao_of[k], ao_of[l]] += val

    return S, T + V, eri


def main():
    r = BOND_ANGSTROM * BOHR_PER_ANGSTROM
    enuc = 1.0 / r
    S, Hcore, eri = integrals(r)
    s12 = S[0, 1]

    # Symmetry orbitals g/u diagonalize everything for homonuclear H2.
    cg = 1.0 / np.sqrt(2.0 * (1.0 + s12))
    cu = 1.0 / np.sqrt(2.0 * (1.0 - s12))
    C = np.array([[cg, cu], [cg, -cu]])  # columns: g, u

    h = C.T @ Hcore @ C
    g_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", C, C, C, C, eri)

    hg, hu = h[0, 0], h[1, 1]
    Jgg = g_mo[0, 0, 0, 0]
    Juu = g_mo[1, 1, 1, 1]
    Jgu = g_mo[0, 0, 1, 1]
    Kgu = g_mo[0, 1, 0, 1]

    e_hf = 2.0 * hg + Jgg + enuc
    ci = np.array([[2.0 * hg + Jgg, Kgu], [Kgu, 2.0 * hu + Juu]])
    w, v = np.linalg.eigh(ci)
    e_fci = w[0] + enuc

    print(f"R = {r:.10f} bohr   Enuc = {enuc:.10f}")
    print(f"hg={hg:.10f} hu={hu:.10f} Jgg={Jgg:.10f} Juu={Juu:.10f} Jgu={Jgu:.10f} Kgu={Kgu:.10f}")
    print(f"E_HF  = {e_hf:.8f} Ha")
    print(f"E_FCI = {e_fci:.8f} Ha   (CI coefficients {v[:,0]})")
    assert abs(e_fci - (-1.1373)) < 5e-5, "FCI energy off the expected -1.1373 Ha"

    write_2q(hg, hu, Jgg, Juu, Jgu, Kgu, enuc, e_fci, e_hf)
    write_jw4(hg, hu, Jgg, Juu, Jgu, Kgu, enuc, e_fci, e_hf)


def pauli_matrix(word):
    P = {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    # word[i] acts on qubit i; qubit 0 is the least significant bit
    m = np.array([[1.0 + 0j]])
    for ch in word:
        m = np.kron(P[ch], m)
    return m


def decompose(H, n):
    """Pauli coefficients of a Hermitian 2^n x 2^n matrix."""
    words = ["".join(w) for w in _all_words(n)]
    out = []
    for w in words:
        c = np.trace(pauli_matrix(w) @ H).real / (2 ** n)
        if abs(c) > 1e-12:
            out.append((c, w))
    return out


def _all_words(n):
    if n == 0:
        yield ()
        return
    for rest in _all_words(n - 1):
        for ch in "IXYZ":
            yield (ch,) + rest


def check_and_write(path, terms, n, e_fci, header_lines):
    H = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for c, w in terms:
        H += c * pauli_matrix(w)
    w_eig = np.linalg.eigvalsh(H)
    assert abs(w_eig[0] - e_fci) < 1e-9, (w_eig[0], e_fci)
    with open(path, "w") as f:
        for line in header_lines:
            f.write(f"# {line}\n")
        for c, w in terms:
            f.write(f"{c:.16e} {w}\n")
    print(f"wrote {path}: {len(terms)} terms, ground = {w_eig[0]:.8f}")


def write_2q(hg, hu, Jgg, Juu, Jgu, Kgu, enuc, e_fci, e_hf):
    eg = 2 * hg + Jgg
    eu = 2 * hu + Juu
    et = hg + hu + Jgu - Kgu   # open-shell triplet (Sz=0)
    es = hg + hu + Jgu + Kgu   # open-shell singlet
    H = np.diag([et, eg, es, eu]).astype(complex)
    H[1, 3] = H[3, 1] = Kgu
    H += enuc * np.eye(4)
    terms = decompose(H, 2)
    check_and_write(
        "data/h2_sto3g_2q.txt",
        terms,
        2,
        e_fci,
        [
            "H2 / STO-3G at 0.7414 A, 2-qubit sector encoding (nuclear repulsion included).",
            "Closed-shell determinants live on |01> and |11>; Hartree-Fock is |01>.",
            f"E_HF = {e_hf:.8f} Ha, E_FCI = {e_fci:.8f} Ha",
        ],
    )


def write_jw4(hg, hu, Jgg, Juu, Jgu, Kgu, enuc, e_fci, e_hf):
    n = 4
    dim = 2 ** n
    # spin orbitals 0..3 = (g up, g dn, u up, u dn); spatial index p//2? No:
    spatial = [0, 0, 1, 1]
    spin = [0, 1, 0, 1]

    h1 = np.array([[hg, 0.0], [0.0, hu]])
    g_mo = np.zeros((2, 2, 2, 2))
    g_mo[0, 0, 0, 0] = Jgg
    g_mo[1, 1, 1, 1] = Juu
    g_mo[0, 0, 1, 1] = g_mo[1, 1, 0, 0] = Jgu
    g_mo[0, 1, 0, 1] = g_mo[1, 0, 1, 0] = g_mo[0, 1, 1, 0] = g_mo[1, 0, 0, 1] = Kgu

    lower = np.array([[0, 1], [0, 0]], dtype=complex)  # |1> -> |0>
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)

    def jw_annihilate(p):
        mats = []
        for q in range(n - 1, -1, -1):  # kron order: qubit n-1 leftmost
            if q == p:
                mats.append(lower)
            elif q < p:
                mats.append(sz)
            else:
                mats.append(eye)
        m = mats[0]
        for x in mats[1:]:
            m = np.kron(m, x)
        return m

    a = [jw_annihilate(p) for p in range(n)]
    ad = [m.conj().T for m in a]

    H = np.zeros((dim, dim), dtype=complex)
    for p in range(n):
        for q in range(n):
            if spin[p] == spin[q]:
                H += h1[spatial[p], spatial[q]] * ad[p] @ a[q]
    for p in range(n):
        for q in range(n):
            for r_ in range(n):
                for s_ in range(n):
                    if spin[p] == spin[s_] and spin[q] == spin[r_]:
                        # <pq|sr> chemist (ps|qr): 0.5 sum a+p a+q a_r a_s
                        val = g_mo[spatial[p], spatial[s_], spatial[q], spatial[r_]]
                        if val != 0.0:
                            H += 0.5 * val * ad[p] @ ad[q] @ a[r_] @ a[s_]
    H += enuc * np.eye(dim)

    hf_index = 0b0011  # modes 0,1 occupied
    e_hf_check = H[hf_index, hf_index].real
    assert abs(e_hf_check - e_hf) < 1e-9, (e_hf_check, e_hf)
    terms = decompose(H, n)
    check_and_write(
        "data/h2_sto3g_jw4.txt",
        terms,
        n,
        e_fci,
        [
            "H2 / STO-3G at 0.7414 A, Jordan-Wigner on 4 spin orbitals (g up, g dn, u up, u dn).",
            "Hartree-Fock determinant occupies qubits 0 and 1.",
            f"E_HF = {e_hf:.8f} Ha, E_FCI = {e_fci:.8f} Ha",
        ],
    )


if __name__ == "__main__":
    main()
