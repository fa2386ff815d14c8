"""Filling fractions from the K-matrix description of the hierarchy."""

from fqhent import KMatrix, chi_k, filling_fraction, hierarchical_phi_k


def main() -> None:
    print("== hierarchical states phi_m ==")
    for m in (1, 3, 5, 7):
        k = hierarchical_phi_k(m)
        print(f"  m={m}: K = {k.entries}, nu = {filling_fraction(k)}")
    print("  closed form 2/(2m+1); m=3 gives 2/7")

    print("\n== chi states ==")
    for m in (3, 5, 7):
        k = chi_k(m)
        print(f"  m={m}: K = {k.entries}, nu = {filling_fraction(k)}")
    print("  closed form (m-1)/m from this K-matrix; an alternative")
    print("  reading 1/(1 - 1/(m-1)) gives 2 at m=3, and neither value")
    print("  is pinned down by the construction itself")

    print("\n== a custom matrix with both components charged ==")
    k = KMatrix(((3, 2), (2, 3)), charge=(1, 1))
    print(f"  K = {k.entries}, q = {k.charge}, nu = {filling_fraction(k)}")


if __name__ == "__main__":
    main()
