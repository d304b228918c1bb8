"""Extracting the boolean core of a fully commutative permutation.

A fully commutative permutation may repeat letters in its reduced words,
but it always factors as (boolean permutation with the same support) times
(remainder), with lengths adding up.  This script walks through that
factorization on a degree-9 example, showing the heap and the reduced word
whose prefix realizes the core.

Run:  python3 demos/boolean_core_walkthrough.py
"""

from fcperm import (
    Permutation,
    all_reduced_words,
    boolean_core,
    heap_of,
    is_boolean,
    word_to_text,
)

w = Permutation.from_text("345619278")
print(f"w = {w.to_text(compact=True)}   length {w.length()}")
print(f"support: {sorted(w.support())}")

heap = heap_of(w)
print(f"\nheap has {heap.size} elements; labels along the generating word:")
print("  " + word_to_text(heap.labels))
for letter in sorted(set(heap.labels)):
    chain = heap.elements_with_label(letter)
    if len(chain) > 1:
        print(f"  letter {letter} repeats at heap elements {chain}")

split = boolean_core(w)
print(f"\ncore      = {split.core.to_text(compact=True)}  (boolean: {is_boolean(split.core)})")
print(f"remainder = {split.remainder.to_text(compact=True)}")
print(f"word      = {word_to_text(split.core_word)} | {word_to_text(split.remainder_word)}")
print(f"lengths   : {split.core.length()} + {split.remainder.length()} = {w.length()}")

print("\nthe core word is a genuine prefix: it appears in the reduced-word set")
full_word = split.core_word + split.remainder_word
print(f"  {word_to_text(full_word)} in R(w): {full_word in all_reduced_words(w)}")

print("\ntwo different elongations of one core:")
for text in ("41623785", "41627385"):
    v = Permutation.from_text(text)
    print(f"  core({text}) = {boolean_core(v).core.to_text(compact=True)}")
