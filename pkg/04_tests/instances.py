from graphs.families import GkParams, gen_g30, gen_g3m, gen_gk, random_matching


def family_instances():
    """(label, graph, k) for the hub-and-paths grid and G_3,M with random matchings."""
    instances = []
    for k in (3, 4, 5, 6):
        for a0 in (1, 2, 3):
            for a1 in (1, 2, 3):
                for a2 in (1, 2, 3):
                    instances.append((f"gk-{k}-{a0}-{a1}-{a2}", gen_gk(GkParams(k, a0, a1, a2)), k))
    for n in range(6, 17, 2):
        instances.append((f"g30-{n}", gen_g30(n), 3))
        for seed in range(5):
            instances.append((f"g3m-{n}-{seed}", gen_g3m(n, random_matching(n, seed)), 3))
    return instances


FAMILY_INSTANCES = family_instances()
