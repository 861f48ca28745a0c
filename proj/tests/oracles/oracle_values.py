"""Independent reference values for the unit tests.

Evaluated with mpmath at 50 digits, directly from the closed-form model
definitions (no code shared with the C++ library). Run:

    python3 tests/oracles/oracle_values.py

and compare against the constants frozen in tests/*.cpp.
"""
import math
from mpmath import mp, mpf, exp, diff, cos, sin, pi

mp.dps = 50


def sigma(t, beta=1):
    return 1 / (1 + exp(-beta * mpf(t)))


def factored(p, x):
    wr, wg, wb, b1, b2, c = p
    r = sum(mpf(a) * mpf(xi) for a, xi in zip(wr, x)) + mpf(b1)
    g = sum(mpf(a) * mpf(xi) for a, xi in zip(wg, x)) + mpf(b2)
    return r * g + sum(mpf(a) * mpf(xi) ** 2 for a, xi in zip(wb, x)) + mpf(c)


def general2(a11, a12, a22, b, c, x):
    x1, x2 = map(mpf, x)
    return a11 * x1 * x1 + a12 * x1 * x2 + a22 * x2 * x2 + b[0] * x1 + b[1] * x2 + c


XOR = ([-0.4, -0.4], [0.2, 1.0], [0.0, 0.0], -0.9095, -0.6426, 0.0)
TABLE = [([0, 0], 0), ([0, 1], 1), ([1, 0], 1), ([1, 1], 0)]

print("sigmoid(1.3)        =", mp.nstr(sigma(1.3), 17))
print("sigmoid(-0.5)       =", mp.nstr(sigma(-0.5), 17))
s10 = sigma(10)
print("sigmoid'(10)        =", mp.nstr(s10 * (1 - s10), 17))
print("xor f([1,1])        =", mp.nstr(factored(XOR, [1, 1]), 17))
print("xor h([1,1])        =", mp.nstr(sigma(factored(XOR, [1, 1])), 17))
loss = sum((sigma(factored(XOR, x)) - y) ** 2 for x, y in TABLE) / 2
print("xor dataset loss    =", mp.nstr(loss, 17))


def flat_loss_factored(params, x, y):
    wr = params[0:2]; wg = params[2:4]; wb = params[4:6]
    b1, b2, c = params[6:9]
    return (sigma(factored((wr, wg, wb, b1, b2, c), x)) - y) ** 2 / 2


flat = [-0.4, -0.4, 0.2, 1.0, 0.0, 0.0, -0.9095, -0.6426, 0.0]
grads = []
for i in range(len(flat)):
    def f(t, i=i):
        p = [mpf(v) for v in flat]
        p[i] = t
        return flat_loss_factored(p, [1, 1], 0)
    grads.append(diff(f, mpf(flat[i])))
print("xor grad ([1,1],0)  =", [mp.nstr(g, 17) for g in grads])

# General neuron, OR-like init with x1*x2 coefficient 0.1.
ORP = [mpf("0.1"), mpf("0.1"), mpf("0.1"), mpf(1), mpf(1), mpf("0.1")]
print("or f([1,1])         =", mp.nstr(general2(ORP[0], ORP[1], ORP[2], ORP[3:5], ORP[5], [1, 1]), 17))
print("or f([1,1]) a12=0   =", mp.nstr(general2(ORP[0], 0, ORP[2], ORP[3:5], ORP[5], [1, 1]), 17))
ggrads = []
for i in range(6):
    def f(t, i=i):
        p = list(ORP)
        p[i] = t
        return (sigma(general2(p[0], p[1], p[2], p[3:5], p[5], [1, 1])) - 1) ** 2 / 2
    ggrads.append(diff(f, ORP[i]))
print("or grad ([1,1],1)   =", [mp.nstr(g, 17) for g in ggrads])


# SplitMix64 (reference algorithm) and the uniform mapping.
M = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.s = seed & M

    def next(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & M
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        return z ^ (z >> 31)

    def unit(self):
        return (self.next() >> 11) / 2.0 ** 53

    def uniform(self, lo, hi):
        return lo + (hi - lo) * self.unit()


r = SplitMix64(1234567)
print("splitmix(1234567)   =", [r.next() for _ in range(5)])
r = SplitMix64(0)
print("splitmix(0)         =", [hex(r.next()) for _ in range(2)])

# First points of the default XOR cloud and ring set (binary64 arithmetic,
# same draw order as the generators).
r = SplitMix64(1)
cloud = []
for corner in [(0, 0), (0, 1), (1, 0), (1, 1)]:
    for k in range(25):
        u1 = r.uniform(-0.2, 0.2)
        u2 = r.uniform(-0.2, 0.2)
        cloud.append((corner[0] + u1, corner[1] + u2))
print("cloud[0], cloud[99] =", [repr(v) for v in cloud[0]], [repr(v) for v in cloud[99]])

r = SplitMix64(7)
first = None
pts = []
for count, radius in [(100, 0.5), (100, 1.0)]:
    for k in range(count):
        rr = radius + r.uniform(-0.05, 0.05)
        th = r.uniform(0.0, 2.0 * math.pi)
        pts.append((rr, th))
print("ring[0] (r, theta)  =", repr(pts[0][0]), repr(pts[0][1]))
print("ring[199] (r,theta) =", repr(pts[199][0]), repr(pts[199][1]))
