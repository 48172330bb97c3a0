"""Sample FASTA documents used by the self-test and the test-suite.

``CORTISTATIN_FASTA`` is the AB000263 mRNA entry with its metadata rejoined
onto one header line (it is printed wrapped over several lines in its source).
Only 359 bases of the declared ``len=368`` survive in that printing.
``INSULIN_FASTA`` is the start of the human insulin sequence.
"""

CORTISTATIN_FASTA = """\
>AB000263 |acc=AB000263|descr=Homo sapiens mRNA for prepro cortistatin like peptide, complete cds.|len=368
ACAAGATGCCATTGTCCCCGGCCTCC
TGCTGCTGCTGCTCTCCGGGGCCACGG
CCACCGCTGCCCTGCCCTGGAGGGTG
GCCCCACCGGCCGAGACAGCGAGCATA
TGCAGGAAGCGGCAGGAATAAGGAAAA
GCAGCCTCCTGACTTTCCTCGCTTGGT
GGTTTGAGTGGACCTCCCAGGCCAGTG
CCGGGCCCTCATAGGAGAGGAAGCTC
GGGAGGTGGCCAGGCGGCAGGAAGGC
GCACCCCCCAGCAATCCGCGCGCCGG
GACAGAATGCCCTGCAGGAATTCTTC
TGGAAGACTTTCTCCTGCAAATAAA
ACCTACCCATGAATGCTCACGCAAGTT
TAATTACAGACCTGAA
"""

INSULIN_FASTA = """\
> insulin |homo sapiens
TACAAACATTTAGTTGTAAACACACCCTC
AGTGGACCAACTCCGCAACATAAACCAA
ACACCGCTCGCGCCGAAAAAGATATGG
GGGTTTTGG
"""
