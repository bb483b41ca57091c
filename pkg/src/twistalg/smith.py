"""Smith normal form over the integers, with exact (big-int) arithmetic.

All homology computations in this package reduce to one primitive: put an
integer matrix into Smith normal form by unimodular row and column
operations.  Entries are plain Python ints, so intermediate growth is safe;
pivots are chosen by minimal absolute value to keep growth down.

The worker keeps only the transforms a caller asks for:

* ``V`` / ``Vinv``  -- column transforms (``A @ V`` picture), needed to read
  off kernel lattices,
* ``Ud``            -- a right-hand-side vector carried through the row
  operations, needed to solve ``A x = d``.

Full ``(D, U, V)`` transforms are available through ``smith_normal_form``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass
class SmithResult:
    """Outcome of a Smith reduction.

    ``diag`` holds the invariant factors d_1 | d_2 | ... (non-negative,
    padded conceptually with zeros up to min(rows, cols)).  ``U``, ``V``,
    ``Vinv`` and ``Ud`` are present only when requested.
    """

    rows: int
    cols: int
    diag: list[int]
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None
    Vinv: list[list[int]] | None = None
    Ud: list[int] | None = None

    def diagonal_padded(self) -> list[int]:
        """Invariant factors padded with zeros to length min(rows, cols)."""
        d = list(self.diag)
        d += [0] * (min(self.rows, self.cols) - len(d))
        return d


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_reduce(
    matrix: list[list[int]],
    *,
    want_U: bool = False,
    want_V: bool = False,
    want_Vinv: bool = False,
    rhs: list[int] | None = None,
) -> SmithResult:
    """Reduce ``matrix`` to Smith normal form; the input is not modified.

    Maintains the invariants ``U @ A_in @ V == A_work`` and, when ``rhs`` is
    given, ``Ud == U @ rhs``.  ``Vinv`` tracks the inverse of ``V`` so
    kernel-lattice coordinates can be converted without a matrix inversion.
    """
    A = [list(row) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    for row in A:
        if len(row) != n:
            raise ValueError("ragged matrix")

    U = _identity(m) if want_U else None
    V = _identity(n) if want_V else None
    Vinv = _identity(n) if want_Vinv else None
    Ud = list(rhs) if rhs is not None else None
    if Ud is not None and len(Ud) != m:
        raise ValueError(f"rhs length {len(Ud)} != row count {m}")

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]
        if Ud is not None:
            Ud[i], Ud[j] = Ud[j], Ud[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row[dst] += q * row[src]
        Ad, As = A[dst], A[src]
        for t in range(n):
            if As[t]:
                Ad[t] += q * As[t]
        if U is not None:
            Uds, Us = U[dst], U[src]
            for t in range(m):
                if Us[t]:
                    Uds[t] += q * Us[t]
        if Ud is not None:
            Ud[dst] += q * Ud[src]

    def negate_row(i: int) -> None:
        A[i] = [-x for x in A[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]
        if Ud is not None:
            Ud[i] = -Ud[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]
        if Vinv is not None:
            # V' = V @ swap  =>  Vinv' = swap @ Vinv (swap is an involution)
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(dst: int, src: int, q: int) -> None:
        # col[dst] += q * col[src]
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]
        if Vinv is not None:
            # inverse op on the left: row[src] -= q * row[dst]
            Rs, Rd = Vinv[src], Vinv[dst]
            for t in range(n):
                if Rd[t]:
                    Rs[t] -= q * Rd[t]

    def negate_col(i: int) -> None:
        for row in A:
            row[i] = -row[i]
        if V is not None:
            for row in V:
                row[i] = -row[i]
        if Vinv is not None:
            Vinv[i] = [-x for x in Vinv[i]]

    def pivot_at(k: int) -> tuple[int, int] | None:
        best = None
        best_val = None
        for i in range(k, m):
            Ai = A[i]
            for j in range(k, n):
                v = Ai[j]
                if v:
                    a = abs(v)
                    if best_val is None or a < best_val:
                        best, best_val = (i, j), a
                        if a == 1:
                            return best
        return best

    k = 0
    limit = min(m, n)
    while k < limit:
        pos = pivot_at(k)
        if pos is None:
            break
        pi, pj = pos
        if pi != k:
            swap_rows(k, pi)
        if pj != k:
            swap_cols(k, pj)

        while True:
            # clear column k below the pivot
            restart = False
            for i in range(k + 1, m):
                a = A[i][k]
                if a:
                    p = A[k][k]
                    q = a // p
                    add_row(i, k, -q)
                    if A[i][k]:
                        # remainder smaller than pivot: promote it
                        swap_rows(k, i)
                        restart = True
            if restart:
                continue
            # clear row k right of the pivot
            for j in range(k + 1, n):
                a = A[k][j]
                if a:
                    p = A[k][k]
                    q = a // p
                    add_col(j, k, -q)
                    if A[k][j]:
                        swap_cols(k, j)
                        restart = True
            if restart:
                continue
            break

        if A[k][k] < 0:
            negate_row(k)
        k += 1

    # enforce the divisibility chain d_i | d_{i+1}; each fix replaces a
    # neighbouring pair by (gcd, lcm), a bubble-sort step on the exponent
    # of every prime, so the sweep stabilizes
    rank = k
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a == 0:
                continue
            changed = True
            # fold d_{i+1} into column i, then gcd the 2x2 block back to
            # diagonal form diag(gcd, lcm)
            add_col(i, i + 1, 1)
            g = gcd(a, b)
            while A[i + 1][i]:
                if abs(A[i + 1][i]) <= abs(A[i][i]):
                    q = A[i][i] // A[i + 1][i]
                    add_row(i, i + 1, -q)
                    if A[i][i] == 0:
                        swap_rows(i, i + 1)
                else:
                    q = A[i + 1][i] // A[i][i]
                    add_row(i + 1, i, -q)
            # fill-in at (i, i+1) is a multiple of the new pivot gcd
            if A[i][i + 1]:
                add_col(i + 1, i, -(A[i][i + 1] // A[i][i]))
            if A[i][i] < 0:
                negate_row(i)
            if A[i + 1][i + 1] < 0:
                negate_row(i + 1)
            assert A[i][i] == g and A[i][i + 1] == 0 and A[i + 1][i] == 0

    diag = [A[i][i] for i in range(rank)]
    return SmithResult(rows=m, cols=n, diag=diag, U=U, V=V, Vinv=Vinv, Ud=Ud)


def smith_normal_form(
    matrix: list[list[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return ``(D, U, V)`` with ``U @ matrix @ V == D`` in Smith form.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with non-negative
    entries satisfying the divisibility chain.
    """
    res = smith_reduce(matrix, want_U=True, want_V=True)
    m, n = res.rows, res.cols
    D = [[0] * n for _ in range(m)]
    for i, d in enumerate(res.diag):
        D[i][i] = d
    return D, res.U, res.V


def invariant_factors(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form (the invariant-factor chain)."""
    return smith_reduce(matrix).diag


def solve_mod(
    matrix: list[list[int]], rhs: list[int], modulus: int
) -> list[int] | None:
    """Solve ``matrix @ x == rhs (mod modulus)`` for an integer vector x.

    Returns one solution reduced mod ``modulus``, or ``None`` when the
    system is inconsistent.  Works over any modulus by diagonalizing the
    coefficient matrix over Z: with U A V = D the system becomes
    ``D y == U rhs (mod modulus)``; each scalar congruence is solvable iff
    gcd(d_i, modulus) divides the right-hand side.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    res = smith_reduce(matrix, want_V=True, rhs=rhs)
    m, n = res.rows, res.cols
    d = res.diagonal_padded()
    b = res.Ud
    y = [0] * n
    for i in range(m):
        di = d[i] if i < len(d) else 0
        bi = b[i] % modulus
        if di == 0:
            if bi != 0:
                return None
            continue
        g = gcd(di, modulus)
        if bi % g != 0:
            return None
        # d_i * y == b_i (mod modulus); divide through by g
        mg = modulus // g
        y[i] = (bi // g) * pow(di // g, -1, mg) % mg if mg > 1 else 0
    V = res.V
    x = [sum(V[i][j] * y[j] for j in range(n) if y[j]) % modulus for i in range(n)]
    return x


def kernel_mod_lattice(
    matrix: list[list[int]], modulus: int
) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Describe the lattice ``{x in Z^n : matrix @ x == 0 (mod modulus)}``.

    Returns ``(V, Vinv, mults)`` where the lattice is spanned by the columns
    of ``V @ diag(mults)``: writing U A V = D with diagonal d_i, the
    congruence D z == 0 (mod modulus) pins z_i to multiples of
    ``modulus // gcd(d_i, modulus)``.  The lattice always contains
    ``modulus * Z^n``, so it has full rank n.
    """
    res = smith_reduce(matrix, want_V=True, want_Vinv=True)
    n = res.cols
    d = res.diagonal_padded() + [0] * (n - min(res.rows, res.cols))
    mults = [modulus // gcd(d[j], modulus) for j in range(n)]
    return res.V, res.Vinv, mults
