"""Read Smale invariants off singular Seifert data, two ways.

A sphere immersion bounded by a 4-manifold mapped generically to
5-space has Omega = (3*sigma + #cusps)/2; mapped to upper 6-space
instead, Omega = (3*sigma + 3t - 3l + L)/2.  The two agree whenever the
bookkeeping satisfies #cusps = 3t - 3l + L, and embeddings (no cusps,
signature in 16Z by Rohlin) land exactly on 24Z.
"""

from imm5 import (
    ImmersionDoubleData,
    SeifertFillingR5,
    SeifertFillingR6,
    smale_via_seifert_r5,
    smale_via_seifert_r6,
)


def main() -> None:
    print("Cusp route: Omega = (3*sigma + #cusps) / 2")
    for sigma, cusps in [(0, 0), (16, 0), (0, 24), (-16, 0), (8, 12)]:
        omega = smale_via_seifert_r5(SeifertFillingR5(sigma, cusps)).omega
        tag = "embedding range" if cusps == 0 and sigma % 16 == 0 else ""
        print(f"  sigma = {sigma:4d}, cusps = {cusps:3d}  ->  Omega = {omega:4d}  {tag}")

    print()
    print("Triple-point route: Omega = (3*sigma + 3t - 3l + L) / 2")
    rows = [
        (0, 0, 0, 0),
        (16, 0, 0, 0),
        (0, 1, 0, 1),
        (0, 4, 0, 12),
    ]
    for sigma, t, l, big_l in rows:
        omega = smale_via_seifert_r6(
            SeifertFillingR6(sigma, t, l), ImmersionDoubleData(big_l)).omega
        cusps = 3 * t - 3 * l + big_l
        check = smale_via_seifert_r5(SeifertFillingR5(sigma, cusps)).omega
        agree = "agrees with cusp route" if check == omega else "MISMATCH"
        print(f"  sigma = {sigma:3d}, t = {t}, l = {l}, L = {big_l:3d}"
              f"  ->  Omega = {omega:4d}  ({agree})")

    print()
    print("Sweep: which cusp-free signatures give embeddings (Omega in 24Z)?")
    hits = [s for s in range(-160, 161, 8)
            if smale_via_seifert_r5(SeifertFillingR5(s, 0)).omega % 24 == 0]
    print(f"  signatures: {hits}")
    print("  ... exactly the multiples of 16, as Rohlin's theorem demands.")


if __name__ == "__main__":
    main()
