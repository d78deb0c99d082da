"""
kb_app/commands — Podkomande CLI-ja; svaki modul izlaže register(subparsers, parents).
"""
