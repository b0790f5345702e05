"""Page templates and namespace layout written by the scaffold command."""

from __future__ import annotations

# Relative paths under pages/, in creation order. Template pages carry the
# sheet tables that new reading/collection/experiment pages copy.
PAGE_TEMPLATES: dict[str, str] = {
    "sidebar.txt": """\
====== Menu ======

  * [[start|Home]]
  * [[infopages|Info pages]]
  * [[phd|Doctoral work]]
  * [[phd:bibliography|Bibliography]]
  * [[phd:collections|Collections]]
  * [[phd:experiments|Experiments]]
  * [[phd:milestones|Milestones]]
  * [[phd:resources|Resources]]
""",
    "start.txt": """\
====== Start ======

Public landing page. Introduce yourself and your research here.
""",
    "infopages.txt": """\
====== Info pages ======

An organized view over explored topics: one page per topic in this
namespace, holding the most interesting facts learned along the way.
""",
    "phd.txt": """\
====== Doctoral work ======

Thesis title and statement, initial planning, and top-level notes.

  * [[phd:bibliography|Bibliography]]
  * [[phd:collections|Collections]]
  * [[phd:experiments|Experiments]]
  * [[phd:milestones|Milestones]]
  * [[phd:resources|Resources]]
""",
    "phd/bibliography.txt": """\
====== Bibliography ======

A categorized list of publication titles linking to their reading sheets.
Display reviewed publications in bold; prefix ongoing and scheduled
reviews with In Review / To Review labels.

===== Reading sheet template =====

Name each reading sheet with the lowercase, dash-separated publication
title and start it with this table:

^ Title |  |
^ Authors |  |
^ Conference |  |
^ Journal |  |
^ Year |  |
^ Institution |  |
^ Publisher |  |

Insert the written summary below the table after reading, then replicate
the publication's sections as headings and take notes under each.
""",
    "phd/bibliography/author.txt": """\
====== Authors ======

One page per author under this namespace, named after the full author
name as it appears in the publication. Each author page lists the
backlinks from their publications.
""",
    "phd/bibliography/year.txt": """\
====== Years ======

One page per publication year under this namespace. Each year page lists
the backlinks from the publications of that year.
""",
    "phd/bibliography/journal.txt": """\
====== Journals ======

One page per journal under this namespace. Each journal page lists the
backlinks from the publications it published.
""",
    "phd/bibliography/conference.txt": """\
====== Conferences ======

One page per conference under this namespace. Each conference page lists
the backlinks from the publications it published.
""",
    "phd/bibliography/publisher.txt": """\
====== Publishers ======

One page per publisher under this namespace. Each publisher page lists
the backlinks from the publications it published.
""",
    "phd/bibliography/institution.txt": """\
====== Institutions ======

One page per institution under this namespace. Each institution page
lists the backlinks from the publications it hosted.
""",
    "phd/collections.txt": """\
====== Collections ======

List the datasets you documented, categorized by type of data.

===== Collection sheet template =====

^ Name |  |
^ Source |  |
^ Paper |  |
^ Date |  |
^ Size |  |
^ Documents |  |
^ Entities |  |
^ Topics |  |
^ Assessments |  |

Replace the statistics rows when they do not apply: network data uses
Nodes and Edges instead. For a subset, point Source at the page of the
original dataset rather than a URL. Add an Evaluations section with a
task/metric/value/source table when results are known from the
literature.
""",
    "phd/experiments.txt": """\
====== Experiments ======

List documented experiments and keep top-level methodology notes here.

===== Experiment sheet template =====

^ ID |  |
^ Start Date |  |
^ End Date |  |
^ Why do it? |  |
^ Main strengths |  |
^ Main weaknesses |  |
^ Test collection |  |

Keep a to-do list, a Versions table describing the model versions
explored, an Evaluations table with a metric value per version, and a
Research log section linking to log pages under the experiment's
namespace.
""",
    "phd/milestones.txt": """\
====== Milestones ======

List doctoral milestones with their top-level activities and the
lower-level tasks for each activity. Document each task in its own page
under this namespace.
""",
    "phd/resources.txt": """\
====== Resources ======

A list of hyperlinks to categorized web resources of interest to the
thesis. Document individual resources in pages under this namespace.
""",
}

# Program page content; the file is named after the program slug.
PROGRAM_TEMPLATE = """\
====== Courses ======

The main page for your program: bureaucratic details and general tasks.
One page per course goes in this namespace.
"""

# Namespace directories under pages/, beyond those implied by page files.
NAMESPACE_DIRS: tuple[str, ...] = (
    "infopages",
    "phd",
    "phd/bibliography",
    "phd/bibliography/author",
    "phd/bibliography/year",
    "phd/bibliography/journal",
    "phd/bibliography/conference",
    "phd/bibliography/publisher",
    "phd/bibliography/institution",
    "phd/bibliography/list",
    "phd/collections",
    "phd/experiments",
    "phd/milestones",
    "phd/resources",
)
