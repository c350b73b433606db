"""Regenerate src/lxf/_quadnodes.py (Gauss-Legendre nodes/weights as double-double pairs).

Dev-only script; requires mpmath. The package itself never imports mpmath.
"""

import mpmath as mp

mp.mp.dps = 50


def dd(x):
    hi = float(x)
    lo = float(x - mp.mpf(hi))
    return hi, lo


def gauss_legendre(n):
    """Nodes/weights of n-point Gauss-Legendre on [-1, 1], 50-digit precision."""
    nodes = []
    for i in range(n):
        # Tricomi-style initial guess, then Newton on P_n.
        x = mp.cos(mp.pi * (4 * i + 3) / (4 * n + 2))
        for _ in range(60):
            pn = mp.legendre(n, x)
            pn1 = mp.legendre(n - 1, x)
            dpn = n * (x * pn - pn1) / (x * x - 1)
            dx = pn / dpn
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-45):
                break
        pn1 = mp.legendre(n - 1, x)
        dpn = n * (x * mp.legendre(n, x) - pn1) / (x * x - 1)
        w = 2 / ((1 - x * x) * dpn * dpn)
        nodes.append((x, w))
    nodes.sort(key=lambda t: t[0])
    return nodes


def emit(n):
    rows = gauss_legendre(n)
    xs = [dd(x) for x, _ in rows]
    ws = [dd(w) for _, w in rows]
    out = [f"GL{n}_NODES = ("]
    out += [f"    ({hi!r}, {lo!r})," for hi, lo in xs]
    out += [")", "", f"GL{n}_WEIGHTS = ("]
    out += [f"    ({hi!r}, {lo!r})," for hi, lo in ws]
    out += [")", ""]
    return "\n".join(out)


HEADER = '''"""Gauss-Legendre nodes and weights on [-1, 1] as (hi, lo) double-double pairs.

Generated by tools/gen_quadnodes.py -- do not edit by hand.
"""

'''

if __name__ == "__main__":
    body = emit(20) + "\n" + emit(40)
    with open("src/lxf/_quadnodes.py", "w") as f:
        f.write(HEADER + body + "\n")
    print("wrote src/lxf/_quadnodes.py")
