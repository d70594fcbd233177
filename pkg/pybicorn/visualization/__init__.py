from .dot import *                  # networkx graphs written as DOT text
