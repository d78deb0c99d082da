"""
kb_core — Algebarski engine: multi-sortne konačne algebre, Halmos skupovi
tačaka, Galoisova korespondencija i odlučivanje ekvivalencije baza znanja.

Sloj ne zna za kb_app; može se koristiti samostalno (skripte, notebook-ovi).
"""
