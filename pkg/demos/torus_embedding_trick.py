"""The 3-torus embedding trick, end to end.

Two embeddings of the 3-torus bound Seifert surfaces of signatures 0
and 8, so their integer invariants are 0 and 12.  The sphere summand
carrying one to the other has Omega = 12, which no sphere embedding
realises (those sit in 24Z) -- yet connect-summing the Omega = 12
immersion onto ANY torus embedding lands on another embedding class,
because the torus embedding offsets fill out all of 12Z.
"""

from imm5 import (
    Gamma2Element,
    RegHomotopyClass,
    SeifertFillingR5,
    SmaleClass,
    SpinBoundarySignatures,
    connected_sum_act,
    embedding_classes,
    homology_profile,
    i_a,
    is_embedding_class,
    solve_for_summand,
)
from imm5.fixtures import presentation

WU0 = Gamma2Element(())


def main() -> None:
    torus = presentation("t3")
    h = homology_profile(torus)
    print(f"Gamma2({torus.name}) has order {h.gamma2_order}: "
          "the integer invariant i classifies completely.\n")

    f0 = RegHomotopyClass(WU0, i_a(SeifertFillingR5(0, 0), h))
    f8 = RegHomotopyClass(WU0, i_a(SeifertFillingR5(8, 0), h))
    print(f"F0 bounds signature 0  ->  i(F0) = {f0.i}")
    print(f"F8 bounds signature 8  ->  i(F8) = {f8.i}")

    summand = solve_for_summand(f0, f8)
    print(f"unique sphere summand with F0 # h ~ F8: Omega(h) = {summand.omega}")

    sphere_set = embedding_classes(
        homology_profile(presentation("s3")),
        SpinBoundarySignatures.from_dict({WU0: [0]}))
    verdict = is_embedding_class(RegHomotopyClass(WU0, summand.omega), sphere_set)
    print(f"is Omega = {summand.omega} an embedding class of the sphere? {verdict}")
    print("  (sphere embeddings live on 24Z, and 12 is not a multiple of 24)\n")

    torus_set = embedding_classes(
        h, SpinBoundarySignatures.from_dict({WU0: [0, 8]}))
    offsets = sorted(torus_set.offsets_mod_24[WU0])
    print(f"torus embedding offsets mod 24: {offsets}  (i.e. all of 12Z)")

    print("\nNow absorb h into torus embeddings E with sigma(W_E) = 8k:")
    for k in range(-3, 4):
        e_class = RegHomotopyClass(WU0, i_a(SeifertFillingR5(8 * k, 0), h))
        summed = connected_sum_act(e_class, SmaleClass(12))
        ok = is_embedding_class(summed, torus_set)
        print(f"  k = {k:2d}: i(E) = {e_class.i:4d}, i(E # h) = {summed.i:4d},"
              f" embedding class: {ok}")
    print("\nThe double points of h cannot be removed on the sphere, but they")
    print("vanish after a connected sum with any torus embedding.")


if __name__ == "__main__":
    main()
