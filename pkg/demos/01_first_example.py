"""Walk through the three-variable network with a single cyclic attractor.

The even cycle a -| b -| a looks like it could host two attractors, but c
activates a and inhibits b, so the cycle is not strong. The strong-cycle
bound therefore drops to 1, and the exhaustive search agrees.
"""

from pathlib import Path

from andnot_bounds import AnalyzeOptions, analyze, build_astg, read_network, state_to_str

bn = read_network(Path(__file__).parent / "data" / "fig1.anbnet")
print(bn)
print()

stg = build_astg(bn)
print(f"asynchronous transition graph: {stg.n_transitions} transitions")
for x in range(stg.n_states):
    succ = [state_to_str(y, bn.n) for _, y in stg.successors(x)]
    print(f"  {state_to_str(x, bn.n)} -> {', '.join(succ) or '(stays)'}")
print()

print(analyze(bn, AnalyzeOptions(verify=True)).to_text())
